import io

from dj_decider.oracle import make_monochromatic
from dj_decider.simulator import amplitudes_direct, format_spectrum_csv, write_spectrum_csv
from dj_decider.simulator.export import format_number
from dj_decider.types import Spectrum


def test_format_number() -> None:
    assert format_number(1.0) == "1"
    assert format_number(-0.0) == "0"
    assert format_number(0.25) == "0.25"
    assert format_number(0.1) == "0.10000000000000001"
    assert float(format_number(1 / 3)) == 1 / 3


def test_spectrum_csv() -> None:
    spectrum = amplitudes_direct(make_monochromatic(2, 1, 1))
    expected = "z,amplitude,probability\n0,0,0\n1,-1,1\n2,0,0\n3,0,0\n"
    assert format_spectrum_csv(spectrum) == expected

    stream = io.StringIO()
    write_spectrum_csv(spectrum, stream)
    assert stream.getvalue() == expected


def test_spectrum_csv_fractions() -> None:
    spectrum = Spectrum(n=1, amplitudes=[0.6, -0.8])
    rows = format_spectrum_csv(spectrum).splitlines()
    assert rows[1] == "0,0.59999999999999998,0.35999999999999999"
