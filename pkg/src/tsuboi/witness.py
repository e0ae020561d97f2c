"""Machine-checkable factorization witnesses.

A witness certifies an upper bound q_x(y) <= len(factors): it names a base
permutation x, a list of (conjugator, exponent) pairs, and the claimed
product.  The certified identity is

    product over i, left to right, of  h_i * x**e_i * h_i**-1  ==  target

with the package convention that the rightmost factor acts first.

The JSON serialization is shared by every command that emits witnesses:

    {"base": "(1 2)", "factors": [{"conjugator": "(2 3)", "exponent": 1}],
     "target": "(1 3)", "verified": true}

``verify_witness_json`` re-checks such a document from scratch using only
the permutation primitives, independently of whatever code produced it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .perm import (Permutation, compose_all, conjugate, format_cycles,
                   parse_cycles)


@dataclass(frozen=True)
class FactorizationWitness:
    base: Permutation
    factors: tuple[tuple[Permutation, int], ...]
    target_rep: Permutation

    @property
    def q(self) -> int:
        return len(self.factors)

    def factor_perms(self) -> list[Permutation]:
        out = []
        for h, e in self.factors:
            if e not in (1, -1):
                raise ValueError(f"exponent must be +-1, got {e}")
            out.append(conjugate(self.base if e == 1 else self.base.inverse(), h))
        return out

    def product(self) -> Permutation:
        return compose_all(self.factor_perms())

    def verify(self) -> bool:
        try:
            return self.product() == self.target_rep
        except ValueError:
            return False

    def to_json_dict(self) -> dict:
        return {
            "base": format_cycles(self.base),
            "factors": [{"conjugator": format_cycles(h), "exponent": e}
                        for h, e in self.factors],
            "target": format_cycles(self.target_rep),
            "verified": self.verify(),
        }

    @staticmethod
    def from_json_dict(doc: dict) -> "FactorizationWitness":
        base = parse_cycles(doc["base"])
        factors = tuple((parse_cycles(f["conjugator"]), int(f["exponent"]))
                        for f in doc["factors"])
        target = parse_cycles(doc["target"])
        return FactorizationWitness(base, factors, target)

    def save(self, path: str, extra: dict | None = None) -> None:
        doc = self.to_json_dict()
        if extra:
            doc.update(extra)
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")


def conjugating_witness(base: Permutation, factor_perms: list[Permutation],
                        target: Permutation) -> FactorizationWitness:
    """Package explicit factors, each conjugate to base, as a witness."""
    from .perm import find_conjugator
    pairs = []
    for f in factor_perms:
        h = find_conjugator(base, f)
        if h is None:
            raise ValueError(f"factor {f!r} is not conjugate to the base")
        pairs.append((h, 1))
    return FactorizationWitness(base, tuple(pairs), target)


def compose_witnesses(w1: FactorizationWitness,
                      w2: FactorizationWitness) -> FactorizationWitness:
    """Chain two witnesses: if w1 writes y as q1 conjugates of x and w2
    writes z as q2 conjugates of y's class, the result writes z as q1*q2
    conjugates of x.  Realizes q_x(z) <= q_x(y) * q_y(z) constructively."""
    from .perm import find_conjugator
    if w1.target_rep.cycle_type() != w2.base.cycle_type():
        raise ValueError("witnesses do not chain: middle types differ")
    new_factors: list[tuple[Permutation, int]] = []
    for h2, e2 in w2.factors:
        mid = conjugate(w2.base if e2 == 1 else w2.base.inverse(), h2)
        inner = w1 if e2 == 1 else _inverted(w1)
        t = find_conjugator(inner.target_rep, mid)
        for h1, e1 in inner.factors:
            new_factors.append((t * h1, e1))
    return FactorizationWitness(w1.base, tuple(new_factors), w2.target_rep)


def _inverted(w: FactorizationWitness) -> FactorizationWitness:
    """Witness for the inverse target: reverse order, flip exponents."""
    factors = tuple((h, -e) for h, e in reversed(w.factors))
    return FactorizationWitness(w.base, factors, w.target_rep.inverse())


def verify_witness_json(doc: dict) -> tuple[bool, str]:
    """Re-verify a witness document using permutation arithmetic only.

    Accepts either a bare witness or any document with a "witness" field.
    Returns (ok, message).  Deliberately independent of the construction
    code: it parses the cycle strings, multiplies, and compares.
    """
    if "witness" in doc and isinstance(doc["witness"], dict):
        doc = doc["witness"]
    try:
        base = parse_cycles(doc["base"])
        target = parse_cycles(doc["target"])
        product = Permutation()
        base_type = base.cycle_type()
        for i, f in enumerate(doc["factors"]):
            h = parse_cycles(f["conjugator"])
            e = int(f["exponent"])
            if e not in (1, -1):
                return False, f"factor {i}: exponent {e} is not +-1"
            g = conjugate(base if e == 1 else base.inverse(), h)
            if g.cycle_type() != base_type:
                return False, f"factor {i}: type drifted (internal error)"
            product = product * g
        if product != target:
            return False, (f"product {format_cycles(product)} != "
                           f"target {format_cycles(target)}")
        if "verified" in doc and not doc["verified"]:
            return False, "document claims verified: false but the product checks out"
        return True, (f"verified: {len(doc['factors'])} factors of type "
                      f"{base_type} multiply to {format_cycles(target)}")
    except (KeyError, TypeError, ValueError) as exc:
        return False, f"malformed witness document: {exc}"
