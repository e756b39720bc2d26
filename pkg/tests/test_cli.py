import pytest

from polysum import catalog, cli


def run(capsys, *argv):
    status = cli.main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out


def test_except_record(capsys):
    status, out = run(capsys, "except", "--sum", "p4+p5+p8",
                      "--domain", "N", "--bound", "10000")
    assert status == 0
    assert "result=[19]" in out and "kind=exceptions" in out


def test_except_empty_list(capsys):
    status, out = run(capsys, "except", "--sum", "p3+p3+p3",
                      "--domain", "N", "--bound", "500")
    assert status == 0
    assert "result=[]" in out


def test_screen_record(capsys):
    status, out = run(capsys, "screen", "--preset", "liouville")
    assert status == 0
    assert "count=7" in out and "missing=[]" in out and "extra=[]" in out


def test_screen_survivor_payload(capsys):
    status, out = run(capsys, "screen", "--preset", "thm-1.1i")
    assert status == 0
    assert "count=20" in out


def test_output_determinism(capsys):
    first = run(capsys, "screen", "--preset", "liouville", "--format", "csv")
    second = run(capsys, "screen", "--preset", "liouville", "--format", "csv")
    assert first == second
    assert first[1].splitlines()[0].startswith("kind,")


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["except", "--sum", "p4+p5+p8", "--domain", "N"])
    assert exc.value.code == 2  # missing --bound
    status, _ = run(capsys, "except", "--sum", "junk",
                    "--domain", "N", "--bound", "10")
    assert status == 2
    status, _ = run(capsys, "screen", "--preset", "nope")
    assert status == 2


def test_mismatch_exit_code(capsys, monkeypatch):
    real_load = catalog.load

    def mutated(identifier):
        if identifier == "liouville-7":
            got = real_load(identifier)
            entries = list(got.entries)
            entries[0] = ((1, 3), (1, 3), (9, 3))
            return catalog.TranscribedList(got.identifier, tuple(entries), got.anchor)
        return real_load(identifier)

    monkeypatch.setattr(cli.catalog, "load", mutated)
    status, out = run(capsys, "screen", "--preset", "liouville")
    assert status == 1
    assert "missing=[p3+p3+9p3]" in out


def test_qform_verify_single_entry(capsys):
    status, out = run(capsys, "qform-verify-catalog", "--entry", "4.10",
                      "--bound", "2000")
    assert status == 0
    assert "equal=true" in out


def test_verify_reduction_all_explicit(capsys):
    status, out = run(capsys, "verify-reduction", "--bound", "500")
    assert status == 0
    assert out.count("holds=true") == 7


def test_reduce_record(capsys):
    status, out = run(capsys, "reduce", "--sum", "p5+p5+2p5", "--domain", "Z")
    assert status == 0
    assert "multiplier=24" in out and "constant=4" in out


def test_prime_scan_record(capsys):
    status, out = run(capsys, "prime-scan", "--a", "2", "--shape", "polygonal",
                      "--order", "7", "--universe", "odd", "--bound", "10000")
    assert status == 0
    assert "max=4313" in out


def test_descent_check(capsys):
    status, out = run(capsys, "descent-check", "--op", "split2n", "--args", "11")
    assert status == 0
    assert "result=[2,0,1]" in out
    status, _ = run(capsys, "descent-check", "--op", "split2n", "--args", "3")
    assert status == 2


def test_conjecture_spot(capsys):
    status, out = run(capsys, "conjecture", "--preset", "1.3", "--bound", "2000")
    assert status == 0
    assert out.count("holds=true") == 31


def test_conjecture_ladder(capsys):
    status, out = run(capsys, "conjecture", "--preset", "1.2", "--bound", "5000")
    assert status == 0
    assert out.count("holds=true") == 8


def test_conjecture_z_not_n_spot(capsys):
    status, out = run(capsys, "conjecture", "--preset", "1.8-spot")
    assert status == 0
    assert "holds=false" not in out
    assert out.count("kind=conjecture") >= 20


def test_csv_round_trip(capsys):
    import csv as csvmod
    import io
    status, out = run(capsys, "except", "--sum", "p3+p5+p32", "--domain", "N",
                      "--bound", "10000", "--format", "csv")
    assert status == 0
    rows = list(csvmod.reader(io.StringIO(out)))
    assert rows[0][0] == "kind"
    record = dict(zip(rows[0], rows[1]))
    assert record["result"] == "[31]"
