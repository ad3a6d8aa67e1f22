"""Canonical JSON for grades, spine points and graded elements.

Rationals are written as strings ("3", "-1/2").  Coefficients in Q(i) are
``{"re": .., "im": ..}``; other cyclotomic coefficients are written on the
power basis of their smallest field as ``{"conductor": N, "powers": [..]}``.
Documents are dumped with sorted keys and no whitespace, so equal values
give identical bytes.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra import GradedElement, frequency_space
from .cyclotomic import Cyclotomic, lcm, totient
from .dsl import parse_model
from .errors import DomainError
from .models import grade_from_json, grade_to_json
from .semigroup import SpineElement
from .trig import TrigPolynomial


_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _rat(s) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.fullmatch(s):
        raise DomainError(f"rationals are encoded as strings, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"malformed rational {s!r}") from None


def coeff_to_json(c: Cyclotomic) -> dict:
    parts = c.gaussian_parts()
    if parts is not None:
        return {"re": str(parts[0]), "im": str(parts[1])}
    k = c.canonical()
    return {"conductor": k.order, "powers": [str(Fraction(v, k.den)) for v in k.nums]}


def coeff_from_json(obj) -> Cyclotomic:
    if not isinstance(obj, dict):
        raise DomainError("coefficient must be an object")
    if set(obj) == {"re", "im"}:
        return Cyclotomic.gaussian(_rat(obj["re"]), _rat(obj["im"]))
    if set(obj) == {"conductor", "powers"}:
        n, powers = obj["conductor"], obj["powers"]
        if not isinstance(n, int) or n < 1 or not isinstance(powers, list) or len(powers) != totient(n):
            raise DomainError("conductor and power list do not match")
        vals = [_rat(p) for p in powers]
        den = 1
        for v in vals:
            den = lcm(den, v.denominator)
        return Cyclotomic(n, [int(v * den) for v in vals], den)
    raise DomainError(f"unknown coefficient keys {sorted(obj)}")


def graded_to_json(u: GradedElement) -> dict:
    return {
        "model": str(u.model),
        "parts": [
            {
                "grade": grade_to_json(g),
                "terms": [
                    {"freq": [str(x) for x in f], "coeff": coeff_to_json(c)} for f, c in p.terms
                ],
            }
            for g, p in u.parts
        ],
    }


def graded_from_json(obj) -> GradedElement:
    if not isinstance(obj, dict) or "model" not in obj or "parts" not in obj:
        raise DomainError("graded element needs 'model' and 'parts'")
    model = parse_model(obj["model"])
    dim, periodic = frequency_space(model)
    if not isinstance(obj["parts"], list):
        raise DomainError("'parts' must be a list")
    parts = []
    for part in obj["parts"]:
        if not isinstance(part, dict) or "grade" not in part or "terms" not in part:
            raise DomainError("each part needs 'grade' and 'terms'")
        g = model.check_grade(grade_from_json(part["grade"]))
        terms = []
        for t in part["terms"]:
            if not isinstance(t, dict) or not isinstance(t.get("freq"), list) or "coeff" not in t:
                raise DomainError("each term needs 'freq' (list) and 'coeff'")
            terms.append((tuple(_rat(x) for x in t["freq"]), coeff_from_json(t["coeff"])))
        parts.append((g, TrigPolynomial.build(dim, periodic, terms)))
    return GradedElement.build(model, parts)


def graded_dumps(u: GradedElement) -> str:
    return dumps(graded_to_json(u))


def graded_loads(text: str) -> GradedElement:
    return graded_from_json(json.loads(text))


def _rep_to_json(rep):
    if rep is None:
        return None
    if isinstance(rep, tuple):
        return [str(x) for x in rep]
    return str(rep)


def spine_to_json(s: SpineElement) -> dict:
    return {"model": str(s.model), "grade": grade_to_json(s.grade), "representative": _rep_to_json(s.rep)}


def spine_from_json(obj) -> SpineElement:
    try:
        model = parse_model(obj["model"])
        rep = obj["representative"]
        if isinstance(rep, list):
            rep = tuple(_rat(x) for x in rep)
        elif rep is not None:
            rep = _rat(rep)
        return SpineElement(model, grade_from_json(obj["grade"]), rep)
    except (KeyError, TypeError):
        raise DomainError("spine element needs 'model', 'grade' and 'representative'") from None
