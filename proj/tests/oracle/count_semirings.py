"""Brute-force semiring counter used to freeze golden enumeration counts.

Independent of the C++ enumerator: generates every associative table by
plain product iteration, keeps distributive pairs, and deduplicates by
minimising over all carrier permutations.
"""
import itertools
import sys


def associative(t, n):
    return all(t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]]
               for a in range(n) for b in range(n) for c in range(n))


def distributive(add, mul, n):
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a * n + add[b * n + c]] != add[mul[a * n + b] * n + mul[a * n + c]]:
                    return False
                if mul[add[b * n + c] * n + a] != add[mul[b * n + a] * n + mul[c * n + a]]:
                    return False
    return True


def relabel(t, perm, n):
    out = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            out[perm[i] * n + perm[j]] = perm[t[i * n + j]]
    return out


def canonical(add, mul, n, perms):
    return min(tuple(relabel(add, p, n) + relabel(mul, p, n)) for p in perms)


def semigroups(n):
    return [list(t) for t in itertools.product(range(n), repeat=n * n)
            if associative(t, n)]


def count(n):
    perms = list(itertools.permutations(range(n)))
    sgs = semigroups(n)
    seen = set()
    for add in sgs:
        for mul in sgs:
            if distributive(add, mul, n):
                seen.add(canonical(add, mul, n, perms))
    return len(sgs), len(seen)


if __name__ == "__main__":
    for n in map(int, sys.argv[1:] or ["1", "2", "3"]):
        labelled, classes = count(n)
        print(f"order {n}: labelled semigroups {labelled}, semirings up to isomorphism {classes}")
