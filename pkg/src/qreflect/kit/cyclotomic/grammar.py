"""Textual coefficient grammar shared by all input formats.

Integers, rationals ``a/b``, ``zeta(n,k)`` for ζ_n^k (``zeta(n)`` for ζ_n),
``i`` for ``zeta(4,1)``, combined with ``+ - * ( )`` and non-negative integer
powers ``^`` or ``**``. The same evaluator reads noncommutative polynomials and
rational functions in ``t`` when the caller binds additional names.
"""

from __future__ import annotations

import ast
import operator
from typing import Any, Mapping

from ..exceptions import ConductorOverflow, ParseError
from .number import CycNumber

_BINARY = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}
_POWER = (ast.Pow,)
RESERVED = frozenset({"zeta", "i"})


class _Evaluator:
    def __init__(self, names: Mapping[str, Any], text: str, source, line):
        self.names = names
        self.text = text
        self.source = source
        self.line = line

    def fail(self, msg: str) -> ParseError:
        return ParseError(f"{msg} in {self.text!r}", source=self.source, line=self.line)

    def integer(self, node: ast.expr) -> int:
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -self.integer(node.operand)
        if (
            isinstance(node, ast.Constant)
            and isinstance(node.value, int)
            and not isinstance(node.value, bool)
        ):
            return node.value
        raise self.fail("expected an integer literal")

    def visit(self, node: ast.expr) -> Any:
        if isinstance(node, ast.Constant):
            if isinstance(node.value, int) and not isinstance(node.value, bool):
                return CycNumber.rational(node.value)
            raise self.fail(f"unsupported literal {node.value!r}")
        if isinstance(node, ast.Name):
            if node.id == "i":
                return CycNumber.zeta(4, 1)
            if node.id in self.names:
                return self.names[node.id]
            raise self.fail(f"unknown symbol {node.id!r}")
        if isinstance(node, ast.UnaryOp):
            operand = self.visit(node.operand)
            if isinstance(node.op, ast.USub):
                return -operand
            if isinstance(node.op, ast.UAdd):
                return operand
            raise self.fail("unsupported unary operator")
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, _POWER):
                exponent = self.integer(node.right)
                if exponent < 0:
                    raise self.fail("negative exponent")
                return self._apply(operator.pow, self.visit(node.left), exponent)
            op = _BINARY.get(type(node.op))
            if op is None:
                raise self.fail("unsupported operator")
            return self._apply(op, self.visit(node.left), self.visit(node.right))
        if isinstance(node, ast.Call):
            if not isinstance(node.func, ast.Name) or node.func.id != "zeta":
                raise self.fail("only zeta(n,k) calls are allowed")
            if node.keywords or not 1 <= len(node.args) <= 2:
                raise self.fail("zeta takes one or two integer arguments")
            order = self.integer(node.args[0])
            exponent = self.integer(node.args[1]) if len(node.args) == 2 else 1
            if order < 1:
                raise self.fail(f"invalid root of unity order {order}")
            return CycNumber.zeta(order, exponent)
        raise self.fail("unsupported syntax")

    def _apply(self, op, left, right):
        try:
            result = op(left, right)
        except (TypeError, ArithmeticError, ValueError) as exc:
            raise self.fail(str(exc) or type(exc).__name__) from exc
        if result is NotImplemented:
            raise self.fail("unsupported operand types")
        return result


def evaluate(
    text: str,
    names: Mapping[str, Any] | None = None,
    *,
    source: str | None = None,
    line: int | None = None,
) -> Any:
    """Evaluate an expression of the coefficient grammar with extra bound names."""
    try:
        # "^" binds like "**", not like the bitwise operator
        tree = ast.parse(text.strip().replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ParseError(
            f"cannot parse {text!r}: {exc.msg}", source=source, line=line
        ) from exc
    return _Evaluator(names or {}, text, source, line).visit(tree.body)


def parse_coefficient(
    text: str, *, source: str | None = None, line: int | None = None
) -> CycNumber:
    """Parse a cyclotomic coefficient."""
    value = evaluate(text, source=source, line=line)
    if not isinstance(value, CycNumber):
        raise ParseError(f"not a coefficient: {text!r}", source=source, line=line)
    return value


def format_coefficient(value: CycNumber) -> str:
    """Render a coefficient so that :func:`parse_coefficient` recovers it exactly."""
    return str(value)


def check_conductor(
    value: CycNumber,
    limit: int | None,
    *,
    source: str | None = None,
    line: int | None = None,
) -> CycNumber:
    """Reject input coefficients whose minimal conductor exceeds ``limit``."""
    if limit is not None and value.minimize().conductor > limit:
        raise ConductorOverflow(
            f"coefficient {value} needs conductor {value.minimize().conductor}, "
            f"above the limit {limit}"
            + (f" (line {line} of {source})" if line is not None and source else "")
        )
    return value
