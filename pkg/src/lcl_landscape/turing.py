"""Linear-space Turing machines with border symbols: model, interpreter, builders, profiling."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import kernels
from .errors import (
    AlphabetConflict,
    InvalidParameter,
    MalformedMachine,
    ParseError,
    ProfileIncomplete,
    Timeout,
)

LEFT_END, RIGHT_END, ZERO = "<", ">", "0"
BORDERS = (LEFT_END, RIGHT_END)
MOVES = {"L": -1, "R": 1}
DEFAULT_STEP_CAP = 10**7
RENAME_LIMIT = 64

Transition = tuple[str, str, str]  # (next state, written symbol, "L" | "R")


@dataclass(frozen=True)
class TuringMachine:
    """Deterministic machine on a tape delimited by ``<`` and ``>``.

    ``separator`` optionally names a symbol marking the end of the machine's
    output prefix; composition uses it to hand the prefix to the next machine.
    """

    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    accept: frozenset[str]
    init: str
    delta: Mapping[tuple[str, str], Transition]
    separator: str | None = None
    _tables: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "accept", frozenset(self.accept))
        object.__setattr__(self, "delta", dict(self.delta))
        st, al = set(self.states), set(self.alphabet)
        if len(st) != len(self.states) or len(al) != len(self.alphabet):
            raise MalformedMachine("duplicate state or symbol")
        for b in BORDERS:
            if b not in al:
                raise MalformedMachine(f"alphabet lacks border symbol {b!r}")
        if not self.accept or not self.accept <= st:
            raise MalformedMachine("accepting set must be a non-empty subset of the states")
        if self.init not in st or self.init in self.accept:
            raise MalformedMachine("initial state must be a non-accepting state")
        if self.separator is not None and (self.separator not in al or self.separator in BORDERS):
            raise MalformedMachine("separator must be an interior symbol of the alphabet")
        for (q, a), (q2, a2, mv) in self.delta.items():
            where = f"delta({q}, {a})"
            if q not in st or q in self.accept:
                raise MalformedMachine(f"{where}: source must be a non-accepting state")
            if q2 not in st or a not in al or a2 not in al:
                raise MalformedMachine(f"{where}: unknown state or symbol")
            if mv not in MOVES:
                raise MalformedMachine(f"{where}: move must be L or R")
            if a == LEFT_END and (a2 != LEFT_END or mv != "R"):
                raise MalformedMachine(f"{where}: left border must be kept and left to the right")
            if a == RIGHT_END and (a2 != RIGHT_END or mv != "L"):
                raise MalformedMachine(f"{where}: right border must be kept and left to the left")
            if a not in BORDERS and a2 in BORDERS:
                raise MalformedMachine(f"{where}: interior cells may not receive a border symbol")

    def step(self, q: str, a: str) -> Transition:
        try:
            return self.delta[(q, a)]
        except KeyError:
            raise MalformedMachine(f"no transition for state {q!r} on symbol {a!r}") from None

    def tables(self):
        """Integer transition tables for the stepping kernel (cached)."""
        if not self._tables:
            si = {q: i for i, q in enumerate(self.states)}
            ai = {a: i for i, a in enumerate(self.alphabet)}
            n_sym = len(self.alphabet)
            size = len(self.states) * n_sym
            nxt, wrt, mov = [-1] * size, [0] * size, [0] * size
            for (q, a), (q2, a2, mv) in self.delta.items():
                idx = si[q] * n_sym + ai[a]
                nxt[idx], wrt[idx], mov[idx] = si[q2], ai[a2], MOVES[mv]
            acc = [1 if q in self.accept else 0 for q in self.states]
            self._tables.update(
                si=si, ai=ai, n_sym=n_sym,
                nxt=kernels.int_array(nxt), wrt=kernels.int_array(wrt),
                mov=kernels.int_array(mov), acc=kernels.int_array(acc),
            )
        return self._tables


@dataclass(frozen=True)
class MachineConfig:
    tape: tuple[str, ...]
    head: int
    state: str
    steps: int


@dataclass(frozen=True)
class RunResult:
    steps: int
    accepted: bool
    final: MachineConfig


def _tokens(m: TuringMachine, word) -> list[str]:
    toks = list(word) if isinstance(word, str) else [str(t) for t in word]
    if not toks:
        raise InvalidParameter("input must be non-empty")
    al = set(m.alphabet)
    for t in toks:
        if t in BORDERS or t not in al:
            raise InvalidParameter(f"input symbol {t!r} is not an interior tape symbol")
    return toks


def initial_config(m: TuringMachine, word) -> MachineConfig:
    return MachineConfig((LEFT_END, *_tokens(m, word), RIGHT_END), 0, m.init, 0)


def run(m: TuringMachine, word, step_cap: int = DEFAULT_STEP_CAP) -> RunResult:
    """Run ``m`` on ``<word>`` from the left border until it accepts."""
    if step_cap <= 0:
        raise InvalidParameter("step_cap must be positive")
    start = initial_config(m, word)
    tb = m.tables()
    tape = kernels.int_array(tb["ai"][a] for a in start.tape)
    steps, state, head, status = kernels.tm_run(
        tb["nxt"], tb["wrt"], tb["mov"], tb["acc"], tb["n_sym"],
        tape, 0, tb["si"][m.init], step_cap,
    )
    assert status != 3, "head left the tape despite border rules"
    final = MachineConfig(
        tuple(m.alphabet[i] for i in tape), head, m.states[state], steps
    )
    if status == 1:
        raise Timeout(f"no acceptance within {step_cap} steps", final)
    if status == 2:
        raise MalformedMachine(
            f"no transition for state {final.state!r} on symbol {final.tape[head]!r}"
        )
    return RunResult(steps, True, final)


def trace(m: TuringMachine, word, step_cap: int = DEFAULT_STEP_CAP) -> list[MachineConfig]:
    """Every configuration from the start up to and including acceptance."""
    cfg = initial_config(m, word)
    tape = list(cfg.tape)
    head, q = 0, m.init
    out = [cfg]
    steps = 0
    while q not in m.accept:
        if steps >= step_cap:
            raise Timeout(f"no acceptance within {step_cap} steps", out[-1])
        q, a2, mv = m.step(q, tape[head])
        tape[head] = a2
        head += MOVES[mv]
        steps += 1
        assert 0 <= head < len(tape)
        out.append(MachineConfig(tuple(tape), head, q, steps))
    return out


def output_prefix(tape: Sequence[str]) -> int:
    """Length of the run of ``0`` cells right after the left border."""
    n = 0
    for a in tape[1:]:
        if a != ZERO:
            break
        n += 1
    return n


# -- builders ------------------------------------------------------------

def _fill(delta: dict, states: Iterable[str], alphabet: Sequence[str], accept) -> None:
    """Give every missing (state, symbol) pair a legal no-op transition."""
    for q in states:
        if q in accept:
            continue
        for a in alphabet:
            if (q, a) not in delta:
                delta[(q, a)] = (q, a, "L" if a == RIGHT_END else "R")


def build_counter_machine(b: int) -> TuringMachine:
    """Base-``b`` odometer on the input cells: counts to b^k - 1 and halts."""
    if not isinstance(b, int) or b < 2:
        raise InvalidParameter("base must be an integer >= 2")
    digits = [str(x) for x in range(b)]
    alphabet = [LEFT_END, RIGHT_END, *digits]
    states = ["rewind", "carry", "halt"]
    delta: dict = {("rewind", LEFT_END): ("carry", LEFT_END, "R")}
    for x in range(b):
        delta[("rewind", digits[x])] = ("rewind", digits[x], "L")
        if x == b - 1:
            delta[("carry", digits[x])] = ("carry", ZERO, "R")
        else:
            delta[("carry", digits[x])] = ("rewind", digits[x + 1], "L")
    delta[("carry", RIGHT_END)] = ("halt", RIGHT_END, "L")
    _fill(delta, states, alphabet, {"halt"})
    return TuringMachine(states, alphabet, {"halt"}, "rewind", delta)


def build_division_machine(q: int) -> TuringMachine:
    """Label cells by position mod ``q``, bubble-sort them, mark the end of the zero prefix.

    The marker ``#`` is written on the first cell after the prefix; when the
    whole interior is zero no marker is written.
    """
    if not isinstance(q, int) or q < 1:
        raise InvalidParameter("q must be a positive integer")
    sym = [ZERO] + [f"m{r}" for r in range(1, q)]
    rank = {a: r for r, a in enumerate(sym)}
    sep = "#"
    alphabet = [LEFT_END, RIGHT_END, *sym, sep]
    lab = [f"lab{r}" for r in range(q)]
    cmp = {(a, f): f"cmp:{a}:{f}" for a in sym for f in (0, 1)}
    put = {a: f"put:{a}" for a in sym}
    states = [*lab, "rw", "p_start", *cmp.values(), *put.values(), "fetch1", "home", "mark", "halt"]
    d: dict = {(lab[0], LEFT_END): (lab[0], LEFT_END, "R")}
    for r in range(q):
        d[(lab[r], ZERO)] = (lab[(r + 1) % q], sym[r], "R")
        d[(lab[r], RIGHT_END)] = ("rw", RIGHT_END, "L")
    for a in sym:
        d[("rw", a)] = ("rw", a, "L")
        d[("home", a)] = ("home", a, "L")
        d[("p_start", a)] = (cmp[(a, 0)], a, "R")
        d[("fetch1", a)] = (cmp[(a, 1)], a, "R")
    d[("rw", LEFT_END)] = ("p_start", LEFT_END, "R")
    d[("home", LEFT_END)] = ("mark", LEFT_END, "R")
    for (a, f), st in cmp.items():
        d[(st, RIGHT_END)] = ("rw" if f else "home", RIGHT_END, "L")
        for b in sym:
            if rank[a] <= rank[b]:
                d[(st, b)] = (cmp[(b, f)], b, "R")
            else:
                d[(st, b)] = (put[b], a, "L")
    for b, st in put.items():
        for a in sym:
            d[(st, a)] = ("fetch1", b, "R")
    d[("mark", ZERO)] = ("mark", ZERO, "R")
    for a in sym[1:]:
        d[("mark", a)] = ("halt", sep, "R")
    d[("mark", RIGHT_END)] = ("halt", RIGHT_END, "L")
    _fill(d, states, alphabet, {"halt"})
    return TuringMachine(states, alphabet, {"halt"}, lab[0], d, separator=sep)


def build_immediate_machine() -> TuringMachine:
    """Accepts after its first step."""
    return TuringMachine(
        ["start", "done"], [LEFT_END, RIGHT_END, ZERO], {"done"}, "start",
        {
            ("start", LEFT_END): ("done", LEFT_END, "R"),
            ("start", ZERO): ("start", ZERO, "R"),
            ("start", RIGHT_END): ("start", RIGHT_END, "L"),
        },
    )


def compose(first: TuringMachine, second: TuringMachine) -> TuringMachine:
    """Run ``first``, rewind, then run ``second`` on the zero prefix ``first`` left behind.

    In the second phase the separator of ``first`` (if any) behaves as the
    right border.  Interior symbols of ``second`` that clash with symbols of
    ``first`` are renamed; only ``0`` and the borders are shared.
    """
    shared = {LEFT_END, RIGHT_END, ZERO}
    taken = set(first.alphabet)
    rename: dict[str, str] = {}
    for a in second.alphabet:
        if a in shared:
            rename[a] = a
            continue
        new = a
        i = 0
        while new in taken:
            i += 1
            if i > RENAME_LIMIT:
                raise AlphabetConflict(f"could not find a fresh name for symbol {a!r}")
            new = f"{a}'{i}"
        rename[a] = new
        taken.add(new)
    alphabet = list(first.alphabet) + [rename[a] for a in second.alphabet if rename[a] not in first.alphabet]
    foreign = [a for a in first.alphabet if a not in shared and a not in set(rename.values())]
    sep = first.separator
    rw = "~rw"
    p1 = {q: f"1:{q}" for q in first.states}
    p2 = {q: f"2:{q}" for q in second.states}
    states = [*(p1[q] for q in first.states if q not in first.accept), rw, *p2.values()]
    accept = {p2[q] for q in second.accept}
    d: dict = {}
    for (q, a), (q2, a2, mv) in first.delta.items():
        d[(p1[q], a)] = (rw if q2 in first.accept else p1[q2], a2, mv)
    for a in alphabet:
        if a == LEFT_END:
            q2, a2, mv = second.step(second.init, LEFT_END)
            d[(rw, a)] = (p2[q2], rename[a2], mv)
        else:
            d[(rw, a)] = (rw, a, "L")
    for (q, a), (q2, a2, mv) in second.delta.items():
        d[(p2[q], rename[a])] = (p2[q2], rename[a2], mv)
    for q in second.states:
        if q in second.accept:
            continue
        # every symbol left over from the first phase acts as the right border
        ends = [sep] if sep is not None else []
        ends += [a for a in foreign if a != sep]
        if (q, RIGHT_END) in second.delta:
            q2, _, _ = second.delta[(q, RIGHT_END)]
            for a in ends:
                d[(p2[q], a)] = (p2[q2], a, "L")
    _fill(d, states, alphabet, accept)
    return TuringMachine(states, alphabet, accept, p1[first.init], d, second.separator and rename[second.separator])


# -- profiling -----------------------------------------------------------

@dataclass(frozen=True)
class TimeProfile:
    T: dict[int, int]
    good_constant: float | None
    violations: tuple[str, ...]

    def csv(self) -> str:
        return "s,T\n" + "".join(f"{s},{t}\n" for s, t in sorted(self.T.items()))


def time_profile(
    m: TuringMachine, s_max: int, step_cap: int = DEFAULT_STEP_CAP, s_min: int = 1
) -> TimeProfile:
    """Step counts on 0^s for s_min..s_max and the smallest constant of the good-function chain."""
    if s_max < 2 or s_min < 1 or s_min > s_max:
        raise InvalidParameter("need 1 <= s_min <= s_max and s_max >= 2")
    T: dict[int, int] = {}
    for s in range(s_min, s_max + 1):
        try:
            T[s] = run(m, ZERO * s, step_cap).steps
        except Timeout as exc:
            raise ProfileIncomplete(f"timeout at s={s}", dict(T)) from exc
    bad = []
    for s, t in T.items():
        if t < s:
            bad.append(f"T({s})={t} < {s}")
        if s + 1 in T and T[s + 1] < t:
            bad.append(f"T({s + 1})={T[s + 1]} < T({s})={t}")
    if bad:
        return TimeProfile(T, None, tuple(bad))
    ratios = [T[s + 1] / T[s] for s in T if s + 1 in T]
    return TimeProfile(T, max(ratios), ())


# -- text format ---------------------------------------------------------

def format_machine(m: TuringMachine) -> str:
    lines = [
        "states " + " ".join(m.states),
        "alphabet " + " ".join(m.alphabet),
        "accept " + " ".join(q for q in m.states if q in m.accept),
        f"init {m.init}",
    ]
    if m.separator is not None:
        lines.append(f"separator {m.separator}")
    for (q, a), (q2, a2, mv) in sorted(m.delta.items(), key=lambda kv: (m.states.index(kv[0][0]), m.alphabet.index(kv[0][1]))):
        lines.append(f"delta {q} {a} {q2} {a2} {mv}")
    return "\n".join(lines) + "\n"


def parse_machine(text: str) -> TuringMachine:
    head: dict[str, list[str]] = {}
    delta: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("//"):
            continue
        key, *rest = line.split()
        if key in ("states", "alphabet", "accept", "init", "separator"):
            if key in head:
                raise ParseError(f"repeated {key!r} line", lineno)
            if not rest or (key in ("init", "separator") and len(rest) != 1):
                raise ParseError(f"malformed {key!r} line", lineno)
            head[key] = rest
        elif key == "delta":
            if len(rest) != 5:
                raise ParseError("expected: delta <q> <a> <q'> <a'> <L|R>", lineno)
            q, a, q2, a2, mv = rest
            if (q, a) in delta:
                raise ParseError(f"duplicate transition for ({q}, {a})", lineno)
            delta[(q, a)] = (q2, a2, mv)
        else:
            raise ParseError(f"unknown record {key!r}", lineno)
    for key in ("states", "alphabet", "accept", "init"):
        if key not in head:
            raise ParseError(f"missing {key!r} line")
    sep = head.get("separator", [None])[0]
    return TuringMachine(head["states"], head["alphabet"], set(head["accept"]), head["init"][0], delta, sep)


def machine_from_spec(spec: str) -> TuringMachine:
    """Build from ``counter:<b>``, ``division:<q>``, ``immediate`` or ``A+B`` compositions."""
    parts = [p.strip() for p in spec.split("+")]
    machines = []
    for p in parts:
        name, _, arg = p.partition(":")
        try:
            if name == "counter":
                machines.append(build_counter_machine(int(arg)))
            elif name == "division":
                machines.append(build_division_machine(int(arg)))
            elif name == "immediate" and not arg:
                machines.append(build_immediate_machine())
            else:
                raise InvalidParameter(f"unknown machine spec {p!r}")
        except ValueError as exc:
            raise InvalidParameter(f"bad machine spec {p!r}: {exc}") from exc
    m = machines[0]
    for nxt in machines[1:]:
        m = compose(m, nxt)
    return m
