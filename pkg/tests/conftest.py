import random
from collections import deque

import numpy as np
import pytest
from scipy.optimize import linprog

from pretropisms import build_polytope, reduced_cyclic_supports

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]


@pytest.fixture
def square():
    return build_polytope(SQUARE)


@pytest.fixture(scope="session")
def reduced_cyclic():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = [build_polytope(s) for s in reduced_cyclic_supports(n).supports]
        return cache[n]
    return get


def random_points(rng: random.Random, dim: int, count: int, hi: int = 3):
    return [tuple(rng.randint(0, hi) for _ in range(dim)) for _ in range(count)]


def random_polytope(rng: random.Random, dim: int, max_points: int = 8, hi: int = 3):
    while True:
        p = build_polytope(random_points(rng, dim, rng.randint(2, max_points), hi))
        if p.edges:
            return p


def random_vector(rng: random.Random, dim: int, lo: int = -3, hi: int = 3):
    while True:
        v = tuple(rng.randint(lo, hi) for _ in range(dim))
        if any(v):
            return v


def random_generators(rng: random.Random, dim: int):
    rays = [random_vector(rng, dim) for _ in range(rng.randint(1, dim + 1))]
    lineality = [random_vector(rng, dim) for _ in range(rng.randint(0, 1))] if rng.random() < 0.3 else []
    return rays, lineality


def lp_in_cone(x, rays, lineality) -> bool:
    """x in cone(rays) + span(lineality), decided by a float LP."""
    cols = [np.array(r, float) for r in rays] + [np.array(l, float) for l in lineality]
    if not cols:
        return not any(x)
    a = np.column_stack(cols)
    bounds = [(0, None)] * len(rays) + [(None, None)] * len(lineality)
    res = linprog(np.zeros(a.shape[1]), A_eq=a, b_eq=np.array(x, float), bounds=bounds, method="highs")
    return res.status == 0


def lp_is_edge(points, i, j) -> bool:
    """Is [p_i, p_j] an edge of conv(points)? Looks for r with <p_j - p_i, r> = 0 and
    <q - p_i, r> >= 1 for every point q off the segment."""
    pi, pj = np.array(points[i], float), np.array(points[j], float)
    d = pj - pi
    rows = []
    for k, q in enumerate(points):
        if k in (i, j):
            continue
        w = np.array(q, float) - pi
        # points on the segment itself are allowed to tie
        if np.linalg.matrix_rank(np.vstack([d, w])) < 2:
            t = w @ d / (d @ d)
            if 0 <= t <= 1:
                continue
            return False
        rows.append(-w)
    dim = len(d)
    if not rows:
        return True
    res = linprog(np.zeros(dim), A_ub=np.array(rows), b_ub=-np.ones(len(rows)),
                  A_eq=d[None, :], b_eq=[0.0], bounds=[(None, None)] * dim, method="highs")
    return res.status == 0


def connected(nodes, neighbors) -> bool:
    nodes = set(nodes)
    if not nodes:
        return True
    start = next(iter(nodes))
    seen = {start}
    todo = deque([start])
    while todo:
        u = todo.popleft()
        for v in neighbors(u):
            if v in nodes and v not in seen:
                seen.add(v)
                todo.append(v)
    return seen == nodes
