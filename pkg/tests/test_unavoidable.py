"""Tests for long cycles, C_{n,m} extraction and wheel minors."""
import networkx as nx
import pytest

from minorhost.core.exceptions import PreconditionError
from minorhost.decomposition.longpath import ell
from minorhost.graphs.families import FamilySpec, generate
from minorhost.graphs.graph import induced, normalize
from minorhost.minors.engine import verify_model
from minorhost.tasks.generators import long_and_short_cycle
from minorhost.unavoidable.certificates import Route
from minorhost.unavoidable.cycles import find_cycle_pair_minor, find_long_cycle
from minorhost.unavoidable.wheels import check_reduction_facts, f_bound, find_wheel_minor, wheel_in_r2_truncation


def named(label):
    return generate(FamilySpec.parse(label))


K4 = normalize(nx.complete_graph(4))


def test_long_cycle_on_cycle():
    """C_10 has a path of length 9, so a cycle of length 3 or more comes back."""
    cycle = find_long_cycle(named("C10"), 3)
    assert len(cycle) == 10


def test_long_cycle_needs_long_path():
    """K_4 has no path of length 9."""
    with pytest.raises(PreconditionError) as info:
        find_long_cycle(K4, 3)
    assert info.value.measurements["required"] == 9


def test_long_cycle_needs_two_connected():
    """Paths are refused outright."""
    with pytest.raises(PreconditionError):
        find_long_cycle(named("P12"), 3)


@pytest.mark.parametrize("host", [named("W4"), K4])
def test_cycle_pair_minor(host):
    """C_{3,3} is certified in small 2-connected graphs with a degree-3 pair."""
    cert = find_cycle_pair_minor(host, 3, 3)
    assert cert.verify().valid
    assert cert.target.label == "C3,3"
    assert cert.subdivision is not None


def test_cycle_pair_minor_absent():
    """A bare cycle has no C_{3,3} minor."""
    with pytest.raises(PreconditionError):
        find_cycle_pair_minor(named("C6"), 3, 3)


def test_cycle_pair_document():
    """The certificate document names the target and the route."""
    doc = find_cycle_pair_minor(named("W4"), 3, 3).to_document()
    assert doc.target == "C3,3"
    assert doc.route == Route.DIRECT_SUBDIVISION.value


def test_wheel_minor():
    """W_5 holds W_5 and D_6 minus an apex holds W_6."""
    cert = find_wheel_minor(named("W5"), 5)
    assert cert is not None and cert.verify().valid
    cert = find_wheel_minor(induced(named("D6"), set(range(7))), 6)
    assert cert is not None and verify_model(cert.model).valid


def test_wheel_minor_too_small():
    """K_4 has too few vertices for W_4."""
    assert find_wheel_minor(K4, 4) is None


def test_wheel_minor_preconditions():
    """k below 3 and graphs that are not 3-connected are refused."""
    with pytest.raises(PreconditionError):
        find_wheel_minor(named("W5"), 2)
    with pytest.raises(PreconditionError):
        find_wheel_minor(named("C5"), 3)


@pytest.mark.parametrize("k", [3, 4])
def test_reduction_facts(k):
    """Every reduction fact holds with a verified witness per deleted vertex."""
    facts = check_reduction_facts(k)
    assert facts.all_true
    assert set(facts.facts) == {"double_wheel", "circular_ladder", "moebius_ladder", "complete_bipartite"}
    for fact in facts.facts.values():
        assert fact.witnesses
        assert all(verify_model(m).valid for m in fact.witnesses.values())


def test_reduction_facts_need_k3():
    """W_2 is not a wheel."""
    with pytest.raises(PreconditionError):
        check_reduction_facts(2)


def test_f_bound():
    """f(k) plugs caller constants into ell."""
    assert f_bound(3, {4: 2}, {4: 2}) == ell(2, 2)
    assert f_bound(5, lambda k: 3, lambda k: 3) == 46


def test_f_bound_missing_constant():
    """Absent constants are reported by name."""
    with pytest.raises(PreconditionError) as info:
        f_bound(3, {}, {4: 2})
    assert info.value.measurements["constant"] == "w"


@pytest.mark.parametrize("k,m", [(3, 3), (4, 4)])
def test_wheel_in_r2_truncation(k, m):
    """Long enough truncations of the two-apex ray hold W_k."""
    cert = wheel_in_r2_truncation(k, m)
    assert cert.verify().valid
    assert cert.target.label == f"W{k}"


def test_wheel_in_r2_truncation_too_short():
    """A two-vertex ray is too short for W_5; a sufficient length is suggested."""
    with pytest.raises(PreconditionError) as info:
        wheel_in_r2_truncation(5, 2)
    assert info.value.measurements["smallest_sufficient_m"] is not None


@pytest.mark.parametrize(
    "attachment,route",
    [
        ("chord", Route.D1_PATH_IN_D2),
        ("disjoint", Route.DISJOINT_CYCLES),
        ("shared-vertex", Route.SHARED_VERTEX),
    ],
)
def test_cycle_pair_structured_routes(attachment, route):
    """A C_18 with a C_6 attached takes the route matching how the two cycles meet."""
    g = long_and_short_cycle(attachment)
    assert g.number_of_nodes() <= 25
    cert = find_cycle_pair_minor(g, 3, 3)
    assert cert.route == route
    assert cert.verify().valid
    assert cert.subdivision is not None
