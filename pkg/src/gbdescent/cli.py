"""Problem-file parser and command-line front end.

Problem files are line oriented::

    # comment
    field Q(i)
    vars x, y
    order lex
    auto conj: i -> -i
    mode affine
    gens:
    x + i*y
    x - i*y

Every line after ``gens:`` is one generator.  Exit codes: 0 for a successful
``gb`` run or a DEFINED OVER FIXED FIELD verdict, 1 for NOT INVARIANT, 2 for
any input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field, replace
from typing import Sequence

from .arith import Automorphism, AutomorphismGroup, FieldDescriptor, FieldError, validate_automorphism
from .descent import DescentReport, NonHomogeneousError, Verdict, conjugate_poly, descent_check
from .groebner import GroebnerBasis, Ideal, ResourceExhausted, reduced_groebner_basis
from .poly import PolyRing, Polynomial, TermOrder, format_monomial, format_polynomial, is_homogeneous
from .syntax import ParseError, parse_element, parse_field, parse_polynomial

EXIT_OK = 0
EXIT_NOT_INVARIANT = 1
EXIT_INPUT_ERROR = 2

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")


class ProblemError(ParseError):
    pass


@dataclass
class AutomorphismDecl:
    name: str
    image_text: str
    automorphism: Automorphism


@dataclass
class ProblemFile:
    field: FieldDescriptor
    variables: tuple[str, ...]
    order: TermOrder
    automorphisms: list[AutomorphismDecl] = field(default_factory=list)
    projective: bool = False
    generators: list[Polynomial] = field(default_factory=list)

    @property
    def ring(self) -> PolyRing:
        return PolyRing(self.field, self.variables)

    @property
    def mode(self) -> str:
        return "projective" if self.projective else "affine"

    def ideal(self) -> Ideal:
        return Ideal(self.generators, ring=self.ring)

    def group(self) -> AutomorphismGroup:
        return AutomorphismGroup.generate(self.field, [a.automorphism for a in self.automorphisms])


def _strip_comment(line: str) -> str:
    k = line.find("#")
    return line if k < 0 else line[:k]


def parse_problem(text: str) -> ProblemFile:
    """Parse and validate a problem file; errors carry line and column."""
    desc: FieldDescriptor | None = None
    variables: tuple[str, ...] | None = None
    order = TermOrder.from_name("lex")
    autos: list[tuple[int, int, str, str, str]] = []
    projective = False
    gen_lines: list[tuple[int, int, str]] = []
    in_gens = False
    gens_line = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        body = line.strip()
        if in_gens:
            gen_lines.append((lineno, indent, body))
            continue
        word, _, rest = body.partition(" ")
        rest_col = indent + len(word) + 1 + (len(rest) - len(rest.lstrip())) + 1
        rest = rest.strip()
        if body == "gens:" or word == "gens:":
            in_gens = True
            gens_line = lineno
            if rest:
                gen_lines.append((lineno, rest_col - 1, rest))
        elif word == "field":
            try:
                desc = parse_field(rest)
            except ParseError as exc:
                raise ProblemError(exc.message, rest_col, lineno) from None
        elif word == "vars":
            names = [v.strip() for v in rest.split(",")]
            for v in names:
                if not _IDENT.match(v):
                    raise ProblemError(f"invalid variable name {v!r}", rest_col, lineno)
            if len(set(names)) != len(names):
                raise ProblemError("variables must be distinct", rest_col, lineno)
            variables = tuple(names)
        elif word == "order":
            try:
                order = TermOrder.from_name(rest)
            except ValueError as exc:
                raise ProblemError(str(exc), rest_col, lineno) from None
        elif word == "mode":
            if rest not in ("affine", "projective"):
                raise ProblemError(f"mode must be affine or projective, got {rest!r}", rest_col, lineno)
            projective = rest == "projective"
        elif word == "auto":
            m = re.match(r"^([A-Za-z_][A-Za-z_0-9]*)\s*:\s*([A-Za-z_][A-Za-z_0-9]*)\s*->\s*(.+)$", rest)
            if not m:
                raise ProblemError("expected 'auto <name>: <gen> -> <expr>'", rest_col, lineno)
            autos.append((lineno, rest_col + m.start(3), m.group(1), m.group(2), m.group(3).strip()))
        else:
            raise ProblemError(f"unknown directive {word!r}", indent + 1, lineno)

    if desc is None:
        raise ProblemError("missing 'field' line")
    if variables is None:
        raise ProblemError("missing 'vars' line")
    try:
        ring = PolyRing(desc, variables)
    except ValueError as exc:
        raise ProblemError(str(exc)) from None

    decls = []
    for lineno, col, name, gen, expr in autos:
        if not desc.has_generator:
            raise ProblemError(f"{desc} has no generator, so no automorphism to declare", col, lineno)
        if gen != desc.symbol:
            raise ProblemError(f"automorphism must map the generator {desc.symbol!r}, not {gen!r}", col, lineno)
        try:
            image = parse_element(expr, desc)
            sigma = validate_automorphism(desc, image, name)
        except ParseError as exc:
            raise ProblemError(exc.message, None if exc.column is None else col + exc.column - 1, lineno) from None
        except FieldError as exc:
            raise ProblemError(f"{type(exc).__name__}: {exc}", col, lineno) from None
        decls.append(AutomorphismDecl(name, expr, sigma))

    if gens_line is None:
        raise ProblemError("missing 'gens:' block")
    gens = []
    for lineno, indent, body in gen_lines:
        try:
            g = parse_polynomial(body, ring)
        except ParseError as exc:
            raise ProblemError(exc.message, None if exc.column is None else indent + exc.column, lineno) from None
        if projective and not is_homogeneous(g):
            raise ProblemError(f"generator {body!r} is not homogeneous (projective mode)", indent + 1, lineno)
        if not g.is_zero():
            gens.append(g)
    if not gens:
        raise ProblemError("no generators", None, gens_line)
    return ProblemFile(desc, variables, order, decls, projective, gens)


def format_problem(problem: ProblemFile) -> str:
    """Canonical text of a problem; ``parse_problem`` inverts it."""
    lines = [f"field {problem.field}", f"vars {', '.join(problem.variables)}", f"order {problem.order.name}"]
    for a in problem.automorphisms:
        lines.append(f"auto {a.name}: {problem.field.symbol} -> {a.automorphism.image}")
    if problem.projective:
        lines.append("mode projective")
    lines.append("gens:")
    lines.extend(format_polynomial(g, problem.order) for g in problem.generators)
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# rendering
# --------------------------------------------------------------------------


def _verdict_line(verdict: Verdict) -> str:
    return "DEFINED OVER FIXED FIELD" if verdict is Verdict.DEFINED_OVER_FIXED_FIELD else "NOT INVARIANT"


def _mono_text(m, variables) -> str:
    return format_monomial(m, variables) or "1"


def render_gb_text(basis: GroebnerBasis) -> str:
    return "".join(line + "\n" for line in basis.lines())


def render_gb_structured(problem: ProblemFile, basis: GroebnerBasis) -> dict:
    return {
        "command": "gb",
        "field": str(problem.field),
        "variables": list(problem.variables),
        "order": basis.order.name,
        "reduced_basis": basis.lines(),
    }


def render_descent_text(problem: ProblemFile, report: DescentReport) -> str:
    order = report.order
    variables = problem.variables
    out = [_verdict_line(report.verdict)]
    out.append(f"# field {problem.field}; order {order.name}; mode {problem.mode}")
    out.append("# invariance")
    for r in report.invariance:
        if r.invariant:
            out.append(f"{r.sigma.name}: invariant")
        else:
            img = format_polynomial(conjugate_poly(r.sigma, r.witness), order)
            out.append(
                f"{r.sigma.name}: NOT invariant; witness {format_polynomial(r.witness, order)} "
                f"maps to {img}, which is not in the ideal"
            )
    out.append("# reduced basis")
    out.extend(report.basis.lines())
    out.append("# coefficients: element, monomial, coefficient, fixed")
    for c in report.coefficients:
        flag = "fixed" if c.fixed else "not fixed"
        out.append(f"{c.element + 1} {_mono_text(c.monomial, variables)} {c.coefficient} {flag}")
    return "\n".join(out) + "\n"


def render_descent_structured(problem: ProblemFile, report: DescentReport) -> dict:
    order = report.order
    variables = problem.variables
    inv = []
    for r in report.invariance:
        inv.append({
            "automorphism": r.sigma.name,
            "generator_image": str(r.sigma.image),
            "invariant": r.invariant,
            "witness": None if r.witness is None else format_polynomial(r.witness, order),
            "witness_image": None if r.witness is None else format_polynomial(conjugate_poly(r.sigma, r.witness), order),
        })
    return {
        "command": "descent",
        "field": str(problem.field),
        "variables": list(variables),
        "order": order.name,
        "mode": problem.mode,
        "homogeneous": report.homogeneous,
        "verdict": report.verdict.value,
        "invariance": inv,
        "reduced_basis": report.basis.lines(),
        "coefficients": [
            {
                "element": c.element,
                "monomial": _mono_text(c.monomial, variables),
                "coefficient": str(c.coefficient),
                "fixed": c.fixed,
            }
            for c in report.coefficients
        ],
    }


def run(problem: ProblemFile, command: str, output_mode: str = "text") -> tuple[str, int]:
    """Execute ``gb`` or ``descent`` on a parsed problem; returns (output, exit code)."""
    if command == "gb":
        basis = reduced_groebner_basis(problem.ideal(), problem.order)
        if output_mode == "structured":
            return json.dumps(render_gb_structured(problem, basis), indent=2) + "\n", EXIT_OK
        return render_gb_text(basis), EXIT_OK
    if command == "descent":
        report = descent_check(problem.ideal(), problem.group(), problem.order, problem.projective)
        code = EXIT_OK if report.defined_over_fixed_field else EXIT_NOT_INVARIANT
        if output_mode == "structured":
            return json.dumps(render_descent_structured(problem, report), indent=2) + "\n", code
        return render_descent_text(problem, report), code
    raise ValueError(f"unknown command {command!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbdescent",
        description="Reduced Groebner bases and descent to the fixed field of a group of automorphisms.",
    )
    parser.add_argument("command", choices=["gb", "descent"])
    parser.add_argument("file", help="problem file ('-' for stdin)")
    parser.add_argument("--order", choices=["lex", "deglex", "degrevlex"], help="override the file's term order")
    parser.add_argument("--format", choices=["text", "structured"], default="text", dest="output_mode")
    parser.add_argument("--projective", action="store_true", help="treat the ideal as homogeneous (projective mode)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code else EXIT_OK
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        problem = parse_problem(text)
        if args.order:
            problem = replace(problem, order=TermOrder.from_name(args.order))
        if args.projective:
            bad = [g for g in problem.generators if not is_homogeneous(g)]
            if bad:
                raise NonHomogeneousError(f"generator {format_polynomial(bad[0], problem.order)} is not homogeneous")
            problem = replace(problem, projective=True)
        output, code = run(problem, args.command, args.output_mode)
    except (OSError, ParseError, NonHomogeneousError, FieldError, ResourceExhausted, ValueError) as exc:
        name = args.file if args.file != "-" else "<stdin>"
        print(f"{name}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    sys.stdout.write(output)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
