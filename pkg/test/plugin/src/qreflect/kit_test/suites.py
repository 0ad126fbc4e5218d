"""Test suites."""

from qreflect.kit import CycNumber, Fixture, FixtureSuite, verify_automorphism
from qreflect.kit.algebra import quantum_plane
from qreflect.kit.automorphism import trace_series


class ExampleSuite(FixtureSuite):
    """Example suite."""

    name = "exampleSuite"
    title = "Example Suite"

    def checks(self):
        """Yield the example fixtures."""
        yield Fixture("trivial", "true is true", lambda: (True, ""))
        yield Fixture("minus_identity", "Tr(-id) = 1/(1 + t)^2", self.minus_identity)

    def minus_identity(self):
        """Trace of minus the identity on the quantum plane with q = -1."""
        plane = quantum_plane(-1)
        g = verify_automorphism(plane, [[-1, 0], [0, -1]], "minus")
        series = trace_series(plane, g, 4)
        expected = [CycNumber.rational((-1) ** i * (i + 1)) for i in range(5)]
        return series == expected, ", ".join(map(str, series))
