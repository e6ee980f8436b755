"""Exception hierarchy.

Input problems (bad files, malformed tables, Jacobi failures) derive from
:class:`InputError`; everything else is an :class:`AnalysisError`.  The CLI
maps the two families to exit codes 2 and 1.
"""


class NilextError(Exception):
    pass


class InputError(NilextError):
    pass


class AnalysisError(NilextError):
    pass


class MalformedTableError(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class JacobiError(InputError):
    def __init__(self, violations):
        self.violations = violations
        (j, k, l), defect = violations[0]
        super().__init__(
            f"Jacobi identity fails for {len(violations)} triple(s); first ({j},{k},{l})"
            f" with defect {format_vector(defect)}"
        )


class NotFoundError(InputError):
    pass


class DimensionError(AnalysisError):
    pass


class ContainmentError(AnalysisError):
    pass


class NotNilpotentError(AnalysisError):
    pass


class NoLayersError(AnalysisError):
    pass


class NotADerivationError(AnalysisError):
    pass


class UnsupportedFactorError(AnalysisError):
    pass


def format_vector(v) -> str:
    terms = []
    for i, c in enumerate(v, start=1):
        if not c:
            continue
        if c == 1:
            terms.append(f"e{i}")
        elif c == -1:
            terms.append(f"-e{i}")
        else:
            terms.append(f"{c}*e{i}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"
