import json
import random
import subprocess
import sys

import pytest

from superhopf.cli import main
from superhopf.combinat import (
    DottedComposition,
    Part,
    SetSupercomposition,
    parse_dotted,
    parse_index,
    parse_supercomposition,
    superpartition_sort,
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _random_ssc(rng: random.Random, permutation: bool = False) -> SetSupercomposition:
    n = rng.randint(0, 7)
    elems = list(range(1, n + 1))
    rng.shuffle(elems)
    blocks = []
    while elems:
        k = 1 if permutation else rng.randint(1, len(elems))
        blocks.append(set(elems[:k]))
        elems = elems[k:]
    blocks += [set() for _ in range(rng.randint(0, 2))]
    rng.shuffle(blocks)
    for b in blocks:
        if not b or rng.random() < 0.3:
            b.add(0)
    return SetSupercomposition.of(*blocks)


def _random_dotted(rng: random.Random) -> DottedComposition:
    parts = []
    for _ in range(rng.randint(0, 6)):
        dotted = rng.random() < 0.4
        parts.append(Part(rng.randint(0 if dotted else 1, 4), dotted))
    return DottedComposition(tuple(parts))


def _noisy(text: str, rng: random.Random) -> str:
    # same index, different spelling
    return "".join(ch + (" " if rng.random() < 0.2 else "") for ch in text)


@pytest.mark.parametrize("kind", ["ssc", "superpermutation", "superpartition", "dotted"])
def test_print_parse_roundtrip(kind):
    rng = random.Random(kind)
    for _ in range(1000):
        if kind == "dotted":
            x = _random_dotted(rng)
        else:
            x = _random_ssc(rng, permutation=kind == "superpermutation")
            if kind == "superpartition":
                x = superpartition_sort(x)[0]
        text = str(x)
        parse = parse_dotted if kind == "dotted" else parse_supercomposition
        assert parse(text) == x
        assert str(parse(_noisy(text, rng))) == text


def test_parse_index_examples():
    I = parse_index("{0,1,3}|{4}|{0}|{0,2}")
    assert (len(I), I.n, I.m) == (4, 4, 3)
    assert str(parse_index("e")) == "e"
    with pytest.raises(ValueError, match="2"):
        parse_index("{1,2}|{2,3}")


def test_product_text(capsys):
    code, out, _ = run(capsys, "product", "--basis", "Q", "{0,2}|{0,1,3}", "{0,1,2}|{0}")
    assert code == 0
    assert out == (
        "+1 * Q[{0,2}|{0,1,3}|{0,4,5}|{0}]\n"
        "-1 * Q[{0,2}|{0,4,5}|{0,1,3}|{0}]\n"
        "+1 * Q[{0,2}|{0,4,5}|{0}|{0,1,3}]\n"
        "+1 * Q[{0,4,5}|{0,2}|{0,1,3}|{0}]\n"
        "-1 * Q[{0,4,5}|{0,2}|{0}|{0,1,3}]\n"
        "+1 * Q[{0,4,5}|{0}|{0,2}|{0,1,3}]\n"
    )


def test_structured_mirrors_text(capsys):
    _, text, _ = run(capsys, "product", "--basis", "Q", "{0,2}|{0,1,3}", "{0,1,2}|{0}")
    _, structured, _ = run(capsys, "product", "--basis", "Q", "{0,2}|{0,1,3}", "{0,1,2}|{0}", "--format", "structured")
    data = json.loads(structured)
    assert data["basis"] == "Q"
    lines = text.splitlines()
    assert len(lines) == len(data["terms"])
    for line, (blocks, c) in zip(lines, data["terms"]):
        label = "|".join("{" + ",".join(map(str, b)) + "}" for b in blocks)
        assert line == f"{c:+d} * Q[{label}]"


def test_other_commands(capsys):
    assert run(capsys, "coproduct", "--basis", "Q", "{0}")[1] == "+1 * Q[e] # Q[{0}]\n+1 * Q[{0}] # Q[e]\n"
    assert run(capsys, "antipode", "--basis", "Q", "{1}|{2}")[1] == "+1 * Q[{2}|{1}]\n"
    out = run(capsys, "convert", "--basis", "MonF", "--to", "Q", "{1}|{0,2}|{3}")[1]
    assert out.splitlines() == [
        "+1 * Q[{1}|{0,2}|{3}]", "-1 * Q[{1}|{0,3}|{2}]", "-1 * Q[{2}|{0,1}|{3}]", "+1 * Q[{3}|{0,2}|{1}]"]
    assert run(capsys, "convert", "--basis", "Q", "--to", "L", "{1}|{2}|{0,3}")[1] == "+1 * L[(2,.1)]\n"
    assert run(capsys, "product", "--basis", "L", "(1)", "(1)")[1] == "+1 * L[(1,1)]\n+1 * L[(2)]\n"
    assert run(capsys, "expand", "--basis", "Mnc", "--vars", "2", "{1}|{2}")[1] == "+1 * x1 x2\n"


def test_poset_upset_dot(capsys):
    code, out, _ = run(capsys, "poset", "--upset", "{0}|{1}|{2}|{4}|{0,3}", "--dot")
    assert code == 0
    assert out.startswith("digraph upset {")
    assert out.count("[label=") == 4
    assert out.count("->") == 4


def test_poset_shapes(capsys):
    out = run(capsys, "poset", "--downset", "(3)", "--format", "text")[1]
    assert out.startswith("4 elements, 4 covers")
    out = run(capsys, "poset", "--fiber", "(1,.1,1)")[1]
    assert out.count("[label=") == 6 and out.count("->") == 6
    out = run(capsys, "poset", "--interval", "{1}|{2}", "{1}|{2}")[1]
    assert out.count("[label=") == 1 and "->" not in out


def test_verify_hopf_axioms(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hopf-axioms", "--max-size", "4")
    assert code == 0
    assert "all checks passed" in out


def test_verify_paper_examples_reports_failure(capsys):
    # the nine-term m-product reference value is not reproducible; the oracle sides with the engine
    code, out, _ = run(capsys, "verify", "--suite", "paper-examples", "--verbose")
    assert code == 1
    failures = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert len(failures) == 1
    assert "m-product" in failures[0]
    assert "first counterexample" in out


@pytest.mark.parametrize("argv", [
    ["product", "--basis", "Q", "{1,2", "{1}"],
    ["product", "--basis", "Q", "{1}"],
    ["convert", "--basis", "Mnc", "--to", "m", "{1}|{2}"],
    ["convert", "--basis", "Mnc", "--to", "MonF", "{1,2}"],
    ["coproduct", "--basis", "MonF", "{1,2}"],
    ["coproduct", "--basis", "m", "{2}|{1}"],
    ["expand", "--basis", "Q", "--vars", "3", "{1}", "--format", "dot"],
])
def test_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("superhopf: error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["product", "--basis", "X", "{1}", "{1}"])
    assert exc.value.code == 2


def test_module_entry_point_is_deterministic():
    argv = [sys.executable, "-m", "superhopf", "coproduct", "--basis", "m", "{0,2,4}|{0,3}|{1}"]
    first = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert first == second
    assert len(first.splitlines()) == 8
