"""Line-oriented ASCII file formats.

Semigroup files carry a `key = value` header (branches, mu, gamma,
optional name) followed by one member point per line, listing exactly
the members of the box [mu, gamma].  Curve files carry the branch
count, uniformizer names, truncation and margin, then `gen:` lines with
one comma-separated polynomial per branch, and optional `ideal-gen:`
lines.  Printing then parsing is the identity on canonical files.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .curves import AlgebroidCurve, FractionalIdeal
from .errors import GoodSemiError
from .rep import normalize
from .series import BranchVector


class ParseError(GoodSemiError, ValueError):
    pass


# -- points ---------------------------------------------------------------


def format_point(p):
    return ",".join(str(c) for c in p)


def parse_point(text, branches=None):
    try:
        p = tuple(int(tok.strip()) for tok in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad lattice point {text!r}") from exc
    if branches is not None and len(p) != branches:
        raise ParseError(f"point {text!r} does not have {branches} coordinates")
    return p


# -- semigroup files --------------------------------------------------------


def print_semigroup_file(rep, name=None):
    lines = []
    if name:
        lines.append(f"name = {name}")
    lines.append(f"branches = {rep.branches}")
    lines.append(f"mu = {format_point(rep.mu)}")
    lines.append(f"gamma = {format_point(rep.gamma)}")
    for p in rep.members():
        lines.append(format_point(p))
    return "\n".join(lines) + "\n"


def _split_header(text):
    header = {}
    body = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" in line:
            key, _, value = line.partition("=")
            key = key.strip()
            if key in header:
                raise ParseError(f"duplicate header key {key!r}")
            header[key] = value.strip()
        else:
            body.append(line)
    return header, body


def parse_semigroup_file(text):
    """Returns (rep, name).  The file must be canonical: its mu and
    gamma are re-derived from the member list and must match."""
    header, body = _split_header(text)
    for key in ("branches", "mu", "gamma"):
        if key not in header:
            raise ParseError(f"missing header line {key!r}")
    try:
        branches = int(header["branches"])
    except ValueError as exc:
        raise ParseError("branches must be an integer") from exc
    mu = parse_point(header["mu"], branches)
    gamma = parse_point(header["gamma"], branches)
    members = [parse_point(line, branches) for line in body]
    rep = normalize(members, gamma)
    if rep.mu != mu:
        raise ParseError(f"header mu {mu} contradicts the member list ({rep.mu})")
    if rep.gamma != gamma:
        raise ParseError(
            f"header gamma {gamma} is not the minimal conductor corner ({rep.gamma})"
        )
    return rep, header.get("name")


# -- polynomials -------------------------------------------------------------


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coeff>\d+(?:/\d+)?)?\s*
        (?:\*\s*)?
        (?:(?P<var>[A-Za-z]\w*)\s*(?:\^\s*(?P<exp>-?\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_polynomial(text, var):
    """A univariate polynomial in `var` with rational coefficients,
    returned as exponent -> Fraction."""
    text = text.strip()
    out = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot read polynomial {text!r} at {text[pos:]!r}")
        sign, coeff, name, exp = m.group("sign", "coeff", "var", "exp")
        if coeff is None and name is None:
            raise ParseError(f"empty term in polynomial {text!r}")
        if sign is None and not first:
            raise ParseError(f"missing sign between terms in {text!r}")
        if name is not None and name != var:
            raise ParseError(f"unknown variable {name!r}, expected {var!r}")
        c = Fraction(coeff) if coeff is not None else Fraction(1)
        if sign == "-":
            c = -c
        e = 0
        if name is not None:
            e = int(exp) if exp is not None else 1
        out[e] = out.get(e, Fraction(0)) + c
        pos = m.end()
        first = False
    return {e: c for e, c in out.items() if c}


def format_polynomial(part, var):
    if not part:
        return "0"
    chunks = []
    for e in sorted(part):
        c = part[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


# -- curve files --------------------------------------------------------------


def _parse_vector(line, uniformizers):
    parts = line.split(",")
    if len(parts) != len(uniformizers):
        raise ParseError(
            f"expected {len(uniformizers)} comma-separated polynomials in {line!r}"
        )
    return BranchVector(
        [parse_polynomial(p, u) for p, u in zip(parts, uniformizers)]
    )


def parse_curve_file(text):
    """Returns (curve, ideal-or-None)."""
    header = {}
    gens = []
    ideal_gens = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("gen:"):
            gens.append(line[len("gen:"):].strip())
        elif line.startswith("ideal-gen:"):
            ideal_gens.append(line[len("ideal-gen:"):].strip())
        elif "=" in line:
            key, _, value = line.partition("=")
            header[key.strip()] = value.strip()
        elif ":" in line:
            key, _, value = line.partition(":")
            header[key.strip()] = value.strip()
        else:
            raise ParseError(f"cannot read curve file line {line!r}")
    if "branches" not in header:
        raise ParseError("missing 'branches' header")
    branches = int(header["branches"])
    if "uniformizers" in header:
        uniformizers = tuple(u.strip() for u in header["uniformizers"].split(","))
        if len(uniformizers) != branches:
            raise ParseError("uniformizer count differs from the branch count")
    else:
        uniformizers = ("t",) if branches == 1 else tuple(
            f"t{b+1}" for b in range(branches)
        )
    if not gens:
        raise ParseError("curve file has no gen: lines")
    truncation = int(header["truncation"]) if "truncation" in header else None
    margin = int(header["margin"]) if "margin" in header else 5
    curve = AlgebroidCurve(
        [_parse_vector(g, uniformizers) for g in gens],
        truncation=truncation,
        margin=margin,
        uniformizers=uniformizers,
        name=header.get("name"),
    )
    ideal = None
    if ideal_gens:
        ideal = FractionalIdeal(
            curve, [_parse_vector(g, uniformizers) for g in ideal_gens]
        )
    return curve, ideal


def print_curve_file(curve, ideal=None):
    lines = []
    if curve.name:
        lines.append(f"name = {curve.name}")
    lines.append(f"branches = {curve.branches}")
    lines.append(f"uniformizers = {','.join(curve.uniformizers)}")
    lines.append(f"truncation = {curve.truncation}")
    lines.append(f"margin = {curve.margin}")
    for g in curve.generators:
        body = ", ".join(
            format_polynomial(p, u) for p, u in zip(g.parts, curve.uniformizers)
        )
        lines.append(f"gen: {body}")
    if ideal is not None:
        for g in ideal.generators:
            body = ", ".join(
                format_polynomial(p, u) for p, u in zip(g.parts, curve.uniformizers)
            )
            lines.append(f"ideal-gen: {body}")
    return "\n".join(lines) + "\n"
