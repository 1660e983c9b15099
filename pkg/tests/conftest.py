"""Shared sweep helpers for the test suite."""
import itertools

from hivelab.core import Triple, Weight, balance_sigma, ell, is_compatible


def compatible_triples(n, max_label, min_label=0, sigma_min=None):
    """All compatible triples with Dynkin labels in [min_label, max_label]."""
    labels = list(itertools.product(range(min_label, max_label + 1), repeat=n - 1))
    weights = [Weight(n, lab) for lab in labels]
    for lam in weights:
        for mu in weights:
            for nu in weights:
                t = Triple(n, lam, mu, nu)
                sigma = balance_sigma(t)
                if sigma.denominator != 1:
                    continue
                if sigma_min is not None and sigma < sigma_min:
                    continue
                yield t


def weight_pairs_by_size(n, max_total):
    """All (lam, mu) with |ell(lam)| + |ell(mu)| <= max_total."""
    out = []
    sizes = {}
    for lab in itertools.product(range(max_total + 1), repeat=n - 1):
        w = Weight(n, lab)
        s = sum(ell(w))
        if s <= max_total:
            sizes.setdefault(s, []).append(w)
    for sa, ws_a in sizes.items():
        for sb, ws_b in sizes.items():
            if sa + sb > max_total:
                continue
            for a in ws_a:
                for b in ws_b:
                    out.append((a, b))
    return out
