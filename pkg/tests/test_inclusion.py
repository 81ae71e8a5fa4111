import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fuzzynet import (
    Domain,
    FuzzyClass,
    FuzzyInstance,
    SystemAttribute,
    UserAttribute,
    UserValue,
    area_intersection,
    deg_area_inclusion,
    deg_attribute_inclusion,
    deg_class_inclusion,
    deg_instance_membership,
    deg_system_value_inclusion,
    deg_user_value_inclusion,
    make_area,
    system_value,
)
from fuzzynet.errors import DomainMismatch, NoPairableAttributes, NoPairableVariables
from fuzzynet.inclusion import value_couple

from conftest import ERASE_N, ERASE_P, GUM, PROCEDURES, REMOVE_N, REMOVE_P
from oracles import attribute_best, overlap_ratio, raw, value_avg

# frozen from the summation oracle: sum(min)/sum(T)
GUM_IN_ERASE_P = overlap_ratio(GUM, ERASE_P, PROCEDURES)  # 2.2 / 2.2
ERASE_N_IN_GUM = overlap_ratio(ERASE_N, GUM, PROCEDURES)  # 2.2 / 2.5
REMOVE_IN_ERASE = value_avg(REMOVE_N, REMOVE_P, ERASE_N, ERASE_P, PROCEDURES)


def test_frozen_oracle_values():
    assert GUM_IN_ERASE_P == pytest.approx(1.0, abs=1e-12)
    assert ERASE_N_IN_GUM == pytest.approx(0.88, abs=1e-12)
    assert REMOVE_IN_ERASE == pytest.approx((1.4 / 1.8 + 1.8 / 2) / 2, abs=1e-12)
    assert REMOVE_IN_ERASE == pytest.approx(0.8388888888888889, abs=1e-12)


def test_intersection(gum, erase, select):
    assert area_intersection(gum, erase.possible) == {
        "EraseWithMenu": 1, "EraseWithKey": 0.7, "CutWithMenu": 0.5
    }
    assert area_intersection(gum, gum) == dict(gum.entries)
    assert area_intersection(erase.necessary, select.necessary) == {}


def test_intersection_domain_mismatch(gum):
    other = make_area("user", Domain("other", PROCEDURES), GUM.items())
    with pytest.raises(DomainMismatch):
        area_intersection(gum, other)
    with pytest.raises(DomainMismatch):
        deg_area_inclusion(gum, other)


def test_area_inclusion_examples(gum, erase, select):
    assert deg_area_inclusion(gum, erase.possible) == pytest.approx(GUM_IN_ERASE_P, abs=1e-9)
    assert deg_area_inclusion(erase.necessary, gum) == pytest.approx(ERASE_N_IN_GUM, abs=1e-9)
    assert deg_area_inclusion(gum, select.possible) == 0.0


def test_system_value_inclusion(erase, select, remove):
    assert deg_system_value_inclusion(erase, erase) == 1
    assert deg_system_value_inclusion(remove, erase) == pytest.approx(REMOVE_IN_ERASE, abs=1e-9)
    assert deg_system_value_inclusion(erase, select) == 0.0
    n, p = value_couple(remove, erase)
    assert n == pytest.approx(1.4 / 1.8, abs=1e-9)
    assert p == pytest.approx(0.9, abs=1e-9)


def test_identity_case_ignores_name(erase, procedure):
    twin = system_value("Efface", procedure, ERASE_N.items(), ERASE_P.items())
    assert deg_system_value_inclusion(twin, erase) == 1


def test_user_value_inclusion(gum, erase, select, procedure):
    assert deg_user_value_inclusion(gum, erase) == pytest.approx(1.0, abs=1e-9)
    assert deg_user_value_inclusion(gum, select) == 0.0
    same = make_area("user", procedure, ERASE_P.items())
    assert deg_user_value_inclusion(same, erase) == 1.0
    assert deg_user_value_inclusion(UserValue("Gum", gum), erase) == pytest.approx(1.0)


def test_user_value_targets(gum, erase):
    # Gum sits below both Erase areas pointwise except EraseWithKey in N (0.7 <= 0.9)
    assert deg_user_value_inclusion(gum, erase, "necessary") == pytest.approx(
        overlap_ratio(GUM, ERASE_N, PROCEDURES)
    )
    assert deg_user_value_inclusion(gum, erase, "avg") == pytest.approx(
        (overlap_ratio(GUM, ERASE_N, PROCEDURES) + overlap_ratio(GUM, ERASE_P, PROCEDURES)) / 2
    )
    with pytest.raises(ValueError):
        deg_user_value_inclusion(gum, erase, "sufficient")


def test_attribute_inclusion(goal, gum, procedure):
    assert deg_attribute_inclusion(goal, goal) == 1.0
    assert deg_attribute_inclusion(goal, goal, pairing="strict") == 1.0
    query = UserAttribute("goal", procedure, {"Gum": gum})
    assert deg_attribute_inclusion(query, goal) == pytest.approx(1.0, abs=1e-9)
    stray = make_area("user", procedure, [("Select", 1.0)])
    mixed = UserAttribute("goal", procedure, {"Gum": gum, "Stray": stray})
    assert deg_attribute_inclusion(mixed, goal) == 0.0


def test_attribute_strict_pairing(goal, remove, erase, procedure):
    a = SystemAttribute("goal", procedure, [remove])
    b = SystemAttribute("goal", procedure, [erase])
    assert deg_attribute_inclusion(a, b, pairing="strict") == 0.0
    assert deg_attribute_inclusion(a, b, pairing="best") == pytest.approx(REMOVE_IN_ERASE)
    with pytest.raises(NoPairableVariables):
        deg_attribute_inclusion(SystemAttribute("goal", procedure, []), b)
    with pytest.raises(ValueError):
        deg_attribute_inclusion(a, b, pairing="fuzzy")


def test_attribute_domain_mismatch(goal, gum):
    other = Domain("other", PROCEDURES)
    with pytest.raises(DomainMismatch):
        deg_attribute_inclusion(SystemAttribute("goal", other, []), goal)


def test_class_inclusion(procedure, erase, remove, goal):
    c = FuzzyClass("C", [goal])
    assert deg_class_inclusion(c, c) == 1.0
    c_remove = FuzzyClass("R", [SystemAttribute("goal", procedure, [remove])])
    c_erase = FuzzyClass("E", [SystemAttribute("goal", procedure, [erase])])
    assert deg_class_inclusion(c_remove, c_erase) == pytest.approx(REMOVE_IN_ERASE, abs=1e-9)
    with pytest.raises(NoPairableAttributes):
        deg_class_inclusion(c_remove, FuzzyClass("X", [SystemAttribute("object", procedure, [erase])]))


def test_class_min_aggregation(procedure):
    # attribute one: 0.88 both sides; attribute two: 0.6 both sides
    t1 = system_value("T1", procedure, ERASE_N.items(), ERASE_N.items())
    s1 = system_value("S1", procedure, GUM.items(), GUM.items())
    t2 = system_value("T2", procedure, [("Select", 1.0)], [("Select", 1.0)])
    s2 = system_value("S2", procedure, [("Select", 0.6)], [("Select", 0.6)])
    c1 = FuzzyClass("C1", [SystemAttribute("a", procedure, [t1]), SystemAttribute("b", procedure, [t2])])
    c2 = FuzzyClass("C2", [SystemAttribute("a", procedure, [s1]), SystemAttribute("b", procedure, [s2])])
    parts = [
        overlap_ratio(ERASE_N, GUM, PROCEDURES),
        overlap_ratio({"Select": 1.0}, {"Select": 0.6}, PROCEDURES),
    ]
    assert parts == pytest.approx([0.88, 0.6])
    assert deg_class_inclusion(c1, c2) == pytest.approx(min(parts), abs=1e-9)


def test_instance_membership(goal, erase, gum, procedure):
    cls = FuzzyClass("Goals", [goal])
    assert deg_instance_membership(FuzzyInstance("e", {"goal": erase}), cls) == 1.0
    assert deg_instance_membership(
        FuzzyInstance("g", {"goal": UserValue("Gum", gum)}), cls
    ) == pytest.approx(1.0, abs=1e-9)
    far = UserValue("Far", make_area("user", procedure, [("Select", 1.0)]))
    assert deg_instance_membership(FuzzyInstance("f", {"goal": far}), cls) == 0.0
    with pytest.raises(NoPairableAttributes):
        deg_instance_membership(FuzzyInstance("x", {"object": erase}), cls)


# property tests over random areas

SMALL = ("a", "b", "c", "d", "e", "f", "g", "h")
degrees = st.floats(min_value=0.01, max_value=1.0, allow_nan=False)


@st.composite
def universes(draw):
    k = draw(st.integers(1, len(SMALL)))
    return Domain("u", SMALL[:k])


@st.composite
def areas(draw, domain, kind="user"):
    entries = draw(st.dictionaries(st.sampled_from(domain.values), degrees, min_size=1))
    return make_area(kind, domain, entries.items())


@st.composite
def sys_values(draw, domain, name=None):
    possible = draw(st.dictionaries(st.sampled_from(domain.values), degrees, min_size=1))
    necessary = {}
    for y, d in possible.items():
        if draw(st.booleans()):
            necessary[y] = draw(st.floats(min_value=0.01, max_value=d))
    if not necessary:
        y = next(iter(possible))
        necessary[y] = possible[y]
    name = name or draw(st.sampled_from(["V0", "V1", "V2", "V3", "V4"]))
    return system_value(name, domain, necessary.items(), possible.items())


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_area_degree_properties(data):
    domain = data.draw(universes())
    t = data.draw(areas(domain))
    s = data.draw(areas(domain))
    d = deg_area_inclusion(t, s)
    assert 0.0 <= d <= 1.0
    assert deg_area_inclusion(t, t) == 1.0
    assert d == pytest.approx(overlap_ratio(raw(t), raw(s), domain.values), abs=1e-9)
    if all(s(y) >= t(y) for y in domain.values):
        assert d == 1.0
    if not (t.support & s.support):
        assert d == 0.0


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_monotone_in_container(data):
    domain = data.draw(universes())
    t = data.draw(areas(domain))
    s = data.draw(areas(domain))
    y = data.draw(st.sampled_from(domain.values))
    raised = dict(s.entries)
    raised[y] = data.draw(st.floats(min_value=raised.get(y, 0.0), max_value=1.0))
    bigger = make_area("user", domain, raised.items())
    assert deg_area_inclusion(t, bigger) >= deg_area_inclusion(t, s) - 1e-12


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_value_degree_matches_oracle(data):
    domain = data.draw(universes())
    t = data.draw(sys_values(domain, "T"))
    s = data.draw(sys_values(domain, "S"))
    d = deg_system_value_inclusion(t, s)
    assert 0.0 <= d <= 1.0
    assert deg_system_value_inclusion(t, t) == 1.0
    expected = value_avg(raw(t.necessary), raw(t.possible), raw(s.necessary), raw(s.possible),
                         domain.values)
    assert d == pytest.approx(expected, abs=1e-9)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_attribute_and_class_min_aggregation(data):
    domain = data.draw(universes())
    names_a = data.draw(st.lists(st.sampled_from(["V0", "V1", "V2", "V3", "V4"]),
                                 min_size=1, max_size=5, unique=True))
    names_b = data.draw(st.lists(st.sampled_from(["V0", "V1", "V2", "V3", "V4"]),
                                 min_size=1, max_size=5, unique=True))
    a = SystemAttribute("x", domain, [data.draw(sys_values(domain, n)) for n in names_a])
    b = SystemAttribute("x", domain, [data.draw(sys_values(domain, n)) for n in names_b])

    def score(t, s, universe):
        return value_avg(raw(t.necessary), raw(t.possible), raw(s.necessary), raw(s.possible),
                         universe)

    components = [max(score(t, s, domain.values) for s in b.values.values())
                  for t in a.values.values()]
    d = deg_attribute_inclusion(a, b)
    assert d == pytest.approx(attribute_best(a.values.values(), b.values.values(),
                                             domain.values, score), abs=1e-9)
    assert d == pytest.approx(min(components), abs=1e-9)
    assert all(d <= c + 1e-12 for c in components)
    assert deg_attribute_inclusion(a, a) == 1.0

    strict = [score(t, b.values[n], domain.values) if n in b.values else 0.0
              for n, t in a.values.items()]
    assert deg_attribute_inclusion(a, b, pairing="strict") == pytest.approx(min(strict), abs=1e-9)

    c1 = FuzzyClass("C1", [a])
    c2 = FuzzyClass("C2", [b])
    assert deg_class_inclusion(c1, c2) == pytest.approx(d, abs=1e-9)
    assert deg_class_inclusion(c1, c1) == 1.0


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_disjoint_supports_zero_everywhere(data):
    domain = Domain("u", SMALL)
    left, right = SMALL[:4], SMALL[4:]
    sub_l, sub_r = Domain("l", left), Domain("r", right)
    t = data.draw(sys_values(sub_l, "T"))
    s = data.draw(sys_values(sub_r, "S"))
    # lift both onto the shared universe
    t = system_value("T", domain, t.necessary.entries.items(), t.possible.entries.items())
    s = system_value("S", domain, s.necessary.entries.items(), s.possible.entries.items())
    u = make_area("user", domain, data.draw(areas(sub_l)).entries.items())
    assert deg_area_inclusion(t.possible, s.possible) == 0.0
    assert deg_system_value_inclusion(t, s) == 0.0
    assert deg_user_value_inclusion(u, s) == 0.0
    a, b = SystemAttribute("x", domain, [t]), SystemAttribute("x", domain, [s])
    assert deg_attribute_inclusion(a, b) == 0.0
    assert deg_class_inclusion(FuzzyClass("A", [a]), FuzzyClass("B", [b])) == 0.0
    assert deg_instance_membership(FuzzyInstance("i", {"x": t}), FuzzyClass("B", [b])) == 0.0
    assert deg_instance_membership(
        FuzzyInstance("i", {"x": UserValue("u", u)}), FuzzyClass("B", [b])) == 0.0


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_instance_membership_min_of_slots(data):
    domain = data.draw(universes())
    attrs = ["x", "y", "z"][: data.draw(st.integers(1, 3))]
    cls_attrs = [SystemAttribute(n, domain, [data.draw(sys_values(domain, f"{n}{k}"))
                                             for k in range(data.draw(st.integers(1, 3)))])
                 for n in attrs]
    cls = FuzzyClass("C", cls_attrs)
    slots = {}
    for n in attrs:
        if data.draw(st.booleans()):
            slots[n] = UserValue("u", data.draw(areas(domain)))
        else:
            slots[n] = data.draw(sys_values(domain, "v"))
    inst = FuzzyInstance("I", slots)
    per_slot = []
    for attr in cls_attrs:
        v = slots[attr.name]
        if isinstance(v, UserValue):
            per_slot.append(max(overlap_ratio(raw(v.area), raw(s.possible), domain.values)
                                for s in attr.values.values()))
        else:
            per_slot.append(max(value_avg(raw(v.necessary), raw(v.possible), raw(s.necessary),
                                          raw(s.possible), domain.values)
                                for s in attr.values.values()))
    d = deg_instance_membership(inst, cls)
    assume(per_slot)
    assert 0.0 <= d <= 1.0
    assert d == pytest.approx(min(per_slot), abs=1e-9)
