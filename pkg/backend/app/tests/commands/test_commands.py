import pytest
from django.core.management.base import CommandError


def test_sign_json(run_json):
    data = run_json("sign", "--n", "2", "a b a^-1")
    assert data == {
        "input": "a b a^-1",
        "n": 2,
        "oracle_checked": True,
        "steps": data["steps"],
        "verdict": "negative",
        "witness": "a^-1 b^-1",
    }


def test_sign_plain(run_command):
    assert run_command("sign", "--n", "2", "--plain", "a^-1 b a^2").strip() == "a^-1 b a^2: negative, witness b^-1"


def test_sign_without_oracle(run_json):
    assert run_json("sign", "--n", "3", "--no-oracle", "b")["oracle_checked"] is False


@pytest.mark.parametrize(
    "args",
    [
        ("sign", "--n", "2", "a c"),
        ("sign", "--n", "0", "a"),
        ("sign", "--n", "64", "a"),
        ("nf", "--n", "2", "a^0"),
    ],
)
def test_usage_errors_exit_two(run_command, args):
    with pytest.raises(CommandError) as exc_info:
        run_command(*args)
    assert exc_info.value.returncode == 2


def test_nf(run_json):
    assert run_json("nf", "--n", "2", "b^-1") == {"ell": -1, "prefix": "a^2 b a^2"}


def test_nf_plain(run_command):
    assert run_command("nf", "--n", "2", "--plain", "a^7").strip() == "a · Δ^2"


def test_cmp(run_json):
    assert run_json("cmp", "--n", "2", "--order", "dlike", "1", "b^-1")["result"] == "less"
    assert run_json("cmp", "--n", "2", "1", "b^-1")["result"] == "greater"


def test_cmp_conjugated(run_json):
    data = run_json("cmp", "--n", "2", "--order", "dlike", "--conj", "b a", "1", "a^-1 b^-1 a")
    assert data["order"] == "conj(dlike, b a)"
    assert data["result"] == "less"


def test_cmp_plain(run_command):
    assert run_command("cmp", "--n", "2", "--plain", "b", "a").strip() == "b < a"


def test_oracle(run_json):
    assert run_json("oracle", "--n", "1", "b a b a^-1") == {"identity": True, "phi": 0, "rho_is_identity": True}
    assert run_json("oracle", "--n", "2", "a^3")["identity"] is False


def test_ctx(run_json):
    assert run_json("ctx", "--n", "4") == {"min_poly": [-1, -1, 1], "n": 4, "phi_a": 2, "phi_b": -3, "q": 5}


def test_b3_sign(run_json):
    data = run_json("b3", "sign", "s1 s2 s1^-1")
    assert data["reduced"] == "s2^-1 s1 s2"
    assert data["bridged"] == "a b^-1 a^-1"
    assert data["d_positive"] is True
    assert data["agree"] is True


def test_b3_bridge(run_json, run_command):
    assert run_json("b3", "bridge", "a b")["output"] == "s1"
    assert run_command("b3", "bridge", "--sigma", "--plain", "s2").strip() == "b^-1"


def test_b3_reduce(run_json):
    data = run_json("b3", "reduce", "s1 s2 s1 s2^-1 s1^-1 s2^-1")
    assert data["reduced"] == "1"
    assert data["d_positive"] is False


def test_converge(run_json, tmp_path):
    elements = tmp_path / "elements.txt"
    elements.write_text("# generators of the test cone\nb^-1\na\n\na b\na b^2\n", encoding="utf-8")
    data = run_json("converge", "--n", "2", "--kmax", "3", "--elems", str(elements))
    assert [row["element"] for row in data["rows"]] == ["b^-1", "a", "a b", "a b^2"]
    assert data["unstable"] == []
    assert data["minima_distinct"] is True


def test_converge_missing_file(run_command, tmp_path):
    with pytest.raises(CommandError) as exc_info:
        run_command("converge", "--n", "2", "--kmax", "3", "--elems", str(tmp_path / "missing.txt"))
    assert exc_info.value.returncode == 2


def test_suite(run_json):
    data = run_json("suite", "--n", "2", "--max-len", "3")
    assert data["passed"] is True
    assert data["scanned"] == 53
    assert data["kind"] == "trichotomy"


def test_suite_plain(run_command):
    output = run_command("suite", "--n", "3", "--max-len", "2", "--kind", "closure", "--plain")
    assert output.strip().endswith("PASS")


def test_suite_defaults_come_from_settings(run_json, settings):
    settings.GAMMA_DEFAULT_MAX_LEN = 2
    assert run_json("suite", "--n", "2")["max_len"] == 2


def test_suite_dehornoy_needs_n2(run_command):
    with pytest.raises(CommandError) as exc_info:
        run_command("suite", "--n", "3", "--kind", "dehornoy", "--max-len", "2")
    assert exc_info.value.returncode == 2


def test_probe(run_json):
    data = run_json("probe", "--n", "2", "--max-len", "1")
    assert data["kind"] == "probe"
    assert data["scanned"] == 5


def test_cayley_json(run_json, settings):
    settings.GAMMA_DEFAULT_RADIUS = 1
    data = run_json("cayley", "--n", "2")
    assert len(data["nodes"]) == 5
    assert len(data["edges"]) == 4


def test_cayley_plain_is_dot(run_command):
    assert "digraph" in run_command("cayley", "--n", "2", "--radius", "1", "--plain")


def test_cayley_radius_bound(run_command):
    with pytest.raises(CommandError) as exc_info:
        run_command("cayley", "--n", "2", "--radius", "7")
    assert exc_info.value.returncode == 2


def test_gamma_mn(run_json):
    assert run_json("gamma_mn", "--m", "2", "--n", "3") == {"holds": True, "isomorphic_to": 4, "m": 2, "n": 3}
