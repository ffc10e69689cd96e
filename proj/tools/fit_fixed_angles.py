#!/usr/bin/env python3
"""Fit QAOA fixed angles for d-regular MaxCut by maximizing the mean <cut>/|E|
over a handful of random regular graphs. Used to produce the 4-regular block
of data/fixed_angles.json."""
import argparse
import json
import random

import numpy as np
from scipy.optimize import minimize


def reg_graph(n, d, seed):
    # configuration model with rejection, same as the C++ generator's intent
    rng = random.Random(seed)
    while True:
        pts = [v for v in range(n) for _ in range(d)]
        rng.shuffle(pts)
        edges = set()
        for i in range(0, len(pts), 2):
            u, v = sorted((pts[i], pts[i + 1]))
            if u == v or (u, v) in edges:
                break
            edges.add((u, v))
        else:
            return sorted(edges)


def cut_values(n, edges):
    idx = np.arange(2**n)
    c = np.zeros(2**n)
    for u, v in edges:
        c += ((idx >> u) & 1) != ((idx >> v) & 1)
    return c


def expected_cut(n, c, gammas, betas):
    psi = np.full(2**n, 2 ** (-n / 2), complex)
    for g, b in zip(gammas, betas):
        psi *= np.exp(1j * g * c)
        for q in range(n):
            psi = psi.reshape(-1, 2, 2**q)
            a0, a1 = psi[:, 0, :].copy(), psi[:, 1, :].copy()
            psi[:, 0, :] = np.cos(b) * a0 + 1j * np.sin(b) * a1
            psi[:, 1, :] = np.cos(b) * a1 + 1j * np.sin(b) * a0
            psi = psi.reshape(-1)
    return np.abs(psi) ** 2 @ c


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degree", type=int, default=4)
    ap.add_argument("--vertices", type=int, default=12)
    ap.add_argument("--graphs", type=int, default=6)
    ap.add_argument("--pmax", type=int, default=5)
    args = ap.parse_args()

    n = args.vertices
    graphs = [reg_graph(n, args.degree, s) for s in range(args.graphs)]
    cs = [(cut_values(n, e), len(e)) for e in graphs]

    def neg(x, p):
        return -np.mean([expected_cut(n, c, x[:p], x[p:]) / m for c, m in cs])

    out, prev = {}, None
    for p in range(1, args.pmax + 1):
        if prev is None:
            x0 = np.array([0.52, 0.39])
        else:  # interpolate the p-1 optimum onto p points
            t, t0 = np.linspace(0, 1, p), np.linspace(0, 1, p - 1)
            x0 = np.concatenate([np.interp(t, t0, prev[: p - 1]), np.interp(t, t0, prev[p - 1 :])])
        r = minimize(neg, x0, args=(p,), method="BFGS", options={"gtol": 1e-7})
        prev = r.x
        out[str(p)] = {"gammas": np.round(r.x[:p], 4).tolist(), "betas": np.round(r.x[p:], 4).tolist(),
                       "mean_ratio": round(-r.fun, 4)}
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
