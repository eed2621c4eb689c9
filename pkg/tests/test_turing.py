import math

import pytest
from hypothesis import given, settings, strategies as st

from lcl_landscape.errors import (
    InvalidParameter,
    MalformedMachine,
    ParseError,
    ProfileIncomplete,
    Timeout,
)
from lcl_landscape.turing import (
    LEFT_END,
    RIGHT_END,
    ZERO,
    TuringMachine,
    build_counter_machine,
    build_division_machine,
    build_immediate_machine,
    compose,
    format_machine,
    machine_from_spec,
    output_prefix,
    parse_machine,
    run,
    time_profile,
    trace,
)

DIVISION_CONSTANT = 3  # measured: q=3 on 0^7 takes 115 <= 3 * 49 steps


def counter_walk(b: int, k: int) -> tuple[int, list[int]]:
    """Head moves of the base-b counting loop on k zero digits, plus one for the final turn.

    Repeatedly: step off the left end; while the digit is b-1 clear it and step
    right; at the right end stop; otherwise bump the digit and walk back home.
    """
    digits = [0] * k
    pos, steps = 0, 0
    while True:
        pos += 1
        steps += 1
        while pos <= k and digits[pos - 1] == b - 1:
            digits[pos - 1] = 0
            pos += 1
            steps += 1
        if pos == k + 1:
            return steps + 1, digits
        digits[pos - 1] += 1
        steps += pos
        pos = 0


def _machine(delta, states=("a", "h"), alphabet=(LEFT_END, RIGHT_END, ZERO)):
    return TuringMachine(states, alphabet, {"h"}, "a", delta)


# -- model -------------------------------------------------------------------------

def test_border_rules_enforced():
    with pytest.raises(MalformedMachine):
        _machine({("a", LEFT_END): ("h", LEFT_END, "L")})
    with pytest.raises(MalformedMachine):
        _machine({("a", RIGHT_END): ("h", ZERO, "L")})
    with pytest.raises(MalformedMachine):
        _machine({("a", ZERO): ("h", RIGHT_END, "R")})


def test_structural_checks():
    with pytest.raises(MalformedMachine):
        TuringMachine(("a", "h"), (LEFT_END, ZERO), {"h"}, "a", {})
    with pytest.raises(MalformedMachine):
        TuringMachine(("a", "h"), (LEFT_END, RIGHT_END, ZERO), set(), "a", {})
    with pytest.raises(MalformedMachine):
        TuringMachine(("a", "h"), (LEFT_END, RIGHT_END, ZERO), {"h"}, "h", {})
    with pytest.raises(MalformedMachine):
        _machine({("h", ZERO): ("a", ZERO, "R")})


def test_immediate_machine_one_step():
    r = run(build_immediate_machine(), "000")
    assert r.steps == 1 and r.accepted


def test_missing_transition():
    m = _machine({("a", LEFT_END): ("a", LEFT_END, "R")})
    with pytest.raises(MalformedMachine):
        run(m, "0")


def test_timeout_and_bad_input():
    loop = _machine({
        ("a", LEFT_END): ("a", LEFT_END, "R"),
        ("a", ZERO): ("a", ZERO, "R"),
        ("a", RIGHT_END): ("a", RIGHT_END, "L"),
    })
    with pytest.raises(Timeout) as exc:
        run(loop, "00", step_cap=50)
    assert exc.value.config.steps == 50
    with pytest.raises(InvalidParameter):
        run(loop, "")
    with pytest.raises(InvalidParameter):
        run(loop, "0>")
    with pytest.raises(InvalidParameter):
        run(loop, "0", step_cap=0)


# -- counter -----------------------------------------------------------------------

@pytest.mark.parametrize("b", [2, 3, 4])
@pytest.mark.parametrize("k", range(1, 7))
def test_counter_matches_walk(b, k):
    steps, digits = counter_walk(b, k)
    r = run(build_counter_machine(b), ZERO * k)
    assert r.steps == steps
    assert list(r.final.tape[1:-1]) == [str(x) for x in digits]


def test_counter_single_cell_cycles():
    configs = trace(build_counter_machine(2), "0")
    seen = [c.tape[1] for c in configs]
    runs = [a for i, a in enumerate(seen) if i == 0 or seen[i - 1] != a]
    assert runs == ["0", "1", "0"]
    assert len(configs) - 1 == 5


def test_counter_known_steps():
    # frozen from the counting walk
    assert [run(build_counter_machine(2), ZERO * k).steps for k in range(1, 9)] == [
        counter_walk(2, k)[0] for k in range(1, 9)
    ] == [5, 12, 27, 58, 121, 248, 503, 1014]


def test_counter_doubling():
    T = [run(build_counter_machine(2), ZERO * k).steps for k in range(4, 10)]
    for a, b in zip(T, T[1:]):
        assert 1.5 <= b / a <= 2.5
    ratios = [t / 2**k for k, t in zip(range(4, 10), T)]
    assert max(ratios) / min(ratios) < 2


def test_counter_base_four():
    t = run(build_counter_machine(4), ZERO * 3).steps
    assert t == counter_walk(4, 3)[0]
    assert 64 <= t <= 4 * 64


def test_counter_rejects_base():
    with pytest.raises(InvalidParameter):
        build_counter_machine(1)


# -- trace, determinism, linear space ------------------------------------------------

@pytest.mark.parametrize("spec", ["counter:2", "division:3", "division:2+counter:2"])
def test_trace_agrees_with_run(spec):
    m = machine_from_spec(spec)
    for k in range(1, 7):
        cfgs = trace(m, ZERO * k)
        r = run(m, ZERO * k)
        assert cfgs[-1] == r.final
        assert len(cfgs) - 1 == r.steps
        assert {len(c.tape) for c in cfgs} == {k + 2}
        assert all(c.tape[0] == LEFT_END and c.tape[-1] == RIGHT_END for c in cfgs)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["counter:2", "counter:3", "division:2", "division:1+counter:2"]), st.integers(1, 7))
def test_run_is_deterministic(spec, k):
    a, b = run(machine_from_spec(spec), ZERO * k), run(machine_from_spec(spec), ZERO * k)
    assert a == b


# -- division ------------------------------------------------------------------------

@pytest.mark.parametrize("q,s,expect", [(1, 5, 5), (2, 5, 3), (3, 7, 3), (2, 8, 4), (4, 9, 3)])
def test_division_prefix(q, s, expect):
    r = run(build_division_machine(q), ZERO * s)
    assert output_prefix(r.final.tape) == expect == math.ceil(s / q)


def test_division_quadratic_steps():
    assert run(build_division_machine(3), ZERO * 7).steps <= DIVISION_CONSTANT * 49
    # short tapes pay a fixed setup cost, so the constant is only claimed from s = 4 on
    for q in range(1, 5):
        for s in range(4, 15):
            assert run(build_division_machine(q), ZERO * s).steps <= DIVISION_CONSTANT * s * s


# -- composition -----------------------------------------------------------------------

def test_compose_division_one_counter():
    m = compose(build_division_machine(1), build_counter_machine(2))
    ratios = [run(m, ZERO * k).steps / 2**k for k in range(4, 13)]
    assert max(ratios) < 8 and min(ratios) > 1


def test_compose_division_two_counter_four():
    m = compose(build_division_machine(2), build_counter_machine(4))
    ratios = [run(m, ZERO * k).steps / 2**k for k in range(6, 15)]
    assert max(ratios) / min(ratios) < 4


def test_compose_with_immediate_is_cheap():
    c = build_counter_machine(2)
    m = compose(build_immediate_machine(), c)
    for k in range(1, 9):
        extra = run(m, ZERO * k).steps - run(c, ZERO * k).steps
        assert 0 <= extra <= 2 * k + 2


def test_compose_sees_only_the_prefix():
    # the counter must stop at the marker, so it counts over ceil(s/2) digits only
    m = compose(build_division_machine(2), build_counter_machine(2))
    d = build_division_machine(2)
    for s in range(2, 9):
        first = run(d, ZERO * s).steps
        half = math.ceil(s / 2)
        total = run(m, ZERO * s).steps
        assert total - first >= counter_walk(2, half)[0]
        assert total - first <= counter_walk(2, half)[0] + 2 * s + 2


def test_compose_renames_clashing_symbols():
    a = build_division_machine(2)
    m = compose(a, a)
    assert len(set(m.alphabet)) == len(m.alphabet)
    assert run(m, ZERO * 6).accepted


# -- profiles ---------------------------------------------------------------------------

def test_counter_profile():
    prof = time_profile(build_counter_machine(2), 10)
    assert not prof.violations and prof.good_constant <= 3
    T = prof.T
    assert all(s <= T[s] <= T[s + 1] for s in range(1, 10))
    assert prof.csv().startswith("s,T\n1,5\n")


def test_immediate_profile_violates_chain():
    prof = time_profile(build_immediate_machine(), 4)
    assert prof.good_constant is None
    assert any("T(2)=1 < 2" in v for v in prof.violations)


def test_profile_incomplete():
    with pytest.raises(ProfileIncomplete) as exc:
        time_profile(build_counter_machine(2), 10, step_cap=100)
    assert exc.value.partial == {1: 5, 2: 12, 3: 27, 4: 58}


def test_profile_rejects_range():
    with pytest.raises(InvalidParameter):
        time_profile(build_counter_machine(2), 1)


def test_half_rate_composition_bounded():
    m = machine_from_spec("division:2+counter:2")
    ratios = [run(m, ZERO * s).steps / 2 ** (s / 2) for s in range(4, 13)]
    assert 1 < min(ratios) and max(ratios) < 20


def _slope(spec):
    m = machine_from_spec(spec)
    xs = list(range(6, 13))
    ys = [math.log2(run(m, ZERO * s, 10**9).steps) for s in xs]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)


@pytest.mark.parametrize(
    "spec,rate",
    [("division:2+counter:2", 0.5), ("counter:2", 1.0), ("division:2+counter:4", 1.0), ("division:1+counter:4", 2.0)],
)
def test_exponential_rate(spec, rate):
    assert abs(_slope(spec) - rate) <= 0.25


# -- text format ------------------------------------------------------------------------

@pytest.mark.parametrize("spec", ["counter:3", "division:2", "immediate", "division:2+counter:2"])
def test_machine_round_trip(spec):
    m = machine_from_spec(spec)
    text = format_machine(m)
    back = parse_machine(text)
    assert back == m and format_machine(back) == text


@pytest.mark.parametrize(
    "text",
    [
        "states a h\nalphabet < > 0\naccept h\n",
        "states a h\nstates a\n",
        "states a h\nalphabet < > 0\naccept h\ninit a\ndelta a < h <\n",
        "states a h\nalphabet < > 0\naccept h\ninit a\nfoo bar\n",
        "states a h\nalphabet < > 0\naccept h\ninit a b\n",
        "states a h\nalphabet < > 0\naccept h\ninit a\ndelta a < h < R\ndelta a < h < R\n",
    ],
)
def test_machine_parse_errors(text):
    with pytest.raises(ParseError):
        parse_machine(text)


def test_parsed_machine_still_checked():
    with pytest.raises(MalformedMachine):
        parse_machine("states a h\nalphabet < > 0\naccept h\ninit a\ndelta a < h < L\n")


@pytest.mark.parametrize("spec", ["counter", "counter:x", "tape:3", "immediate:2"])
def test_bad_specs(spec):
    with pytest.raises(InvalidParameter):
        machine_from_spec(spec)
