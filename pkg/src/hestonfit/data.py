"""Quote-file parsing and the bundled sample datasets.

Quote files hold one option per row in seven numeric columns
``s0 t k r mid bid ask``, whitespace or comma delimited; blank lines and
lines starting with '#' are skipped.
"""

from .calibrate import MarketQuote
from .errors import EmptyFile, ParseError

# Listed US equity call quotes observed in Feb-Mar 2014; three chains of
# increasing calibration difficulty.  Columns: s0, t, k, r, mid, bid, ask.
_D1 = [
    (328.29, 0.1753424, 275, 0.000553778, 56.9, 55.5, 58.3),
    (328.29, 0.1753424, 300, 0.000553778, 36.3, 35.0, 37.6),
    (328.29, 0.1753424, 325, 0.000553778, 19.6, 19.3, 19.9),
    (328.29, 0.1753424, 350, 0.000553778, 9.45, 9.2, 9.7),
    (328.29, 0.1753424, 375, 0.000553778, 4.3, 4.1, 4.5),
    (328.29, 0.4246575, 275, 0.000659467, 63.2, 61.7, 64.7),
    (328.29, 0.4246575, 300, 0.000659467, 44.9, 44.4, 45.4),
    (328.29, 0.4246575, 325, 0.000659467, 30.55, 30.2, 30.9),
    (328.29, 0.4246575, 350, 0.000659467, 20.05, 19.7, 20.4),
    (328.29, 0.4246575, 375, 0.000659467, 12.5, 12.2, 12.8),
    (328.29, 0.9232876, 275, 0.000850338, 77.55, 76.1, 79.0),
    (328.29, 0.9232876, 300, 0.000850338, 61.45, 60.8, 62.1),
    (328.29, 0.9232876, 325, 0.000850338, 48.9, 48.1, 49.7),
    (328.29, 0.9232876, 350, 0.000850338, 38.45, 37.9, 39.0),
    (328.29, 0.9232876, 375, 0.000850338, 29.5, 29.0, 30.0),
]
_D2 = [
    (1313.67, 0.3972602, 1200, 0.000697973, 160.15, 158.6, 161.7),
    (1313.67, 0.3972602, 1250, 0.000697973, 127.25, 125.6, 128.9),
    (1313.67, 0.3972602, 1300, 0.000697973, 99.15, 98.0, 100.3),
    (1313.67, 0.3972602, 1350, 0.000697973, 75.25, 73.8, 76.7),
    (1313.67, 0.3972602, 1400, 0.000697973, 55.6, 54.4, 56.8),
    (1313.67, 0.8958904, 1200, 0.000853821, 211.1, 209.4, 212.8),
    (1313.67, 0.8958904, 1250, 0.000853821, 182.25, 180.6, 183.9),
    (1313.67, 0.8958904, 1300, 0.000853821, 156.35, 155.0, 157.7),
    (1313.67, 0.8958904, 1350, 0.000853821, 132.2, 130.3, 134.1),
    (1313.67, 0.8958904, 1400, 0.000853821, 111.55, 110.2, 112.9),
    (1313.67, 1.8904109, 1200, 0.002228013, 286, 284.2, 287.8),
    (1313.67, 1.8904109, 1250, 0.002228013, 259.75, 257.8, 261.7),
    (1313.67, 1.8904109, 1300, 0.002228013, 235.3, 233.2, 237.4),
    (1313.67, 1.8904109, 1350, 0.002228013, 213.05, 211.2, 214.9),
    (1313.67, 1.8904109, 1400, 0.002228013, 192.2, 190.4, 194.0),
]
_D3 = [
    (39.63, 0.0493150, 36, 0.000631752, 3.75, 3.7, 3.8),
    (39.63, 0.0493150, 38, 0.000631752, 2.145, 2.13, 2.16),
    (39.63, 0.0493150, 40, 0.000631752, 1.035, 1.02, 1.05),
    (39.63, 0.0493150, 42, 0.000631752, 0.435, 0.42, 0.45),
    (39.63, 0.0493150, 44, 0.000631752, 0.17, 0.16, 0.18),
    (39.63, 0.1260273, 36, 0.000707312, 4.3, 4.25, 4.35),
    (39.63, 0.1260273, 38, 0.000707312, 2.91, 2.89, 2.93),
    (39.63, 0.1260273, 40, 0.000707312, 1.85, 1.84, 1.86),
    (39.63, 0.1260273, 42, 0.000707312, 1.095, 1.08, 1.11),
    (39.63, 0.1260273, 44, 0.000707312, 0.615, 0.61, 0.62),
    (39.63, 0.3753424, 36, 0.000734416, 5.55, 5.5, 5.6),
    (39.63, 0.3753424, 38, 0.000734416, 4.35, 4.3, 4.4),
    (39.63, 0.3753424, 40, 0.000734416, 3.35, 3.3, 3.4),
    (39.63, 0.3753424, 42, 0.000734416, 2.55, 2.53, 2.57),
    (39.63, 0.3753424, 44, 0.000734416, 1.92, 1.9, 1.94),
    (39.63, 0.6246575, 36, 0.000796417, 6.475, 6.4, 6.55),
    (39.63, 0.6246575, 38, 0.000796417, 5.35, 5.3, 5.4),
    (39.63, 0.6246575, 40, 0.000796417, 4.4, 4.35, 4.45),
    (39.63, 0.6246575, 42, 0.000796417, 3.6, 3.55, 3.65),
    (39.63, 0.6246575, 44, 0.000796417, 2.92, 2.89, 2.95),
    (39.63, 0.8739726, 35, 0.000882340, 7.775, 7.7, 7.85),
    (39.63, 0.8739726, 37, 0.000882340, 6.675, 6.6, 6.75),
    (39.63, 0.8739726, 40, 0.000882340, 5.25, 5.2, 5.3),
    (39.63, 0.8739726, 42, 0.000882340, 4.425, 4.35, 4.5),
    (39.63, 0.8739726, 45, 0.000882340, 3.425, 3.35, 3.5),
    (39.63, 1.8684931, 35, 0.002280481, 10.125, 9.95, 10.3),
    (39.63, 1.8684931, 37, 0.002280481, 9.2, 9.05, 9.35),
    (39.63, 1.8684931, 40, 0.002280481, 7.85, 7.75, 7.95),
    (39.63, 1.8684931, 42, 0.002280481, 7.1, 7.0, 7.2),
    (39.63, 1.8684931, 45, 0.002280481, 6.1, 5.95, 6.25),
]
_DATASETS = {"D1": _D1, "D2": _D2, "D3": _D3}

DATASET_IDS = tuple(sorted(_DATASETS))


def builtin_dataset(dataset_id: str) -> list[MarketQuote]:
    """Return a fresh list of quotes for one of the bundled datasets."""
    try:
        rows = _DATASETS[dataset_id]
    except KeyError:
        raise KeyError(f"unknown dataset {dataset_id!r}; "
                       f"choose from {', '.join(DATASET_IDS)}") from None
    return [MarketQuote(*row) for row in rows]


def parse_quotes(stream) -> list[MarketQuote]:
    """Parse quotes from an iterable of text lines (file object or list).

    Raises ParseError with the 1-based line number on a malformed row and
    EmptyFile when no data rows are present.
    """
    if isinstance(stream, str):
        stream = stream.splitlines()
    quotes = []
    for line_no, line in enumerate(stream, start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        fields = body.replace(",", " ").split()
        if len(fields) != 7:
            raise ParseError(line_no, f"expected 7 columns, found {len(fields)}")
        try:
            values = [float(f) for f in fields]
        except ValueError:
            raise ParseError(line_no, f"non-numeric field in {body!r}") from None
        if values[6] < values[5]:
            raise ParseError(line_no, f"bid {values[5]} exceeds ask {values[6]}")
        try:
            quotes.append(MarketQuote(*values))
        except ValueError as e:
            raise ParseError(line_no, str(e)) from None
    if not quotes:
        raise EmptyFile("no data rows found")
    return quotes


def serialize_quotes(quotes) -> str:
    """Render quotes back to the 7-column text format (full precision)."""
    lines = ["# s0 t k r mid bid ask"]
    for quote in quotes:
        lines.append(" ".join(repr(v) for v in
                              (quote.s0, quote.t, quote.k, quote.r,
                               quote.mid, quote.bid, quote.ask)))
    return "\n".join(lines) + "\n"
