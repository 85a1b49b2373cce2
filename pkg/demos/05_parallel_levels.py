"""
Level-synchronous worker pools
==============================

The cones of one level are independent work items. A pool of processes
explores them and the results are merged in a fixed order, so the output
does not depend on the number of workers.
"""

if __name__ == "__main__":
    import time

    from pretropisms import build_polytope, find_pretropisms, reduced_cyclic_supports

    polys = [build_polytope(s) for s in reduced_cyclic_supports(6).supports]
    reference = None
    for workers in (1, 2, 4):
        start = time.perf_counter()
        report = find_pretropisms(polys, workers=workers)
        doc = report.to_json()
        same = reference is None or doc == reference
        reference = reference or doc
        print(f"workers={workers}: {len(report.rays)} rays, sum {report.stats.sum}, "
              f"{time.perf_counter() - start:.2f}s, identical: {same}")
