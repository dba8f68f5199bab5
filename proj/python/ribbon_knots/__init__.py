from ._ribbon import (
    Diagram,
    Verdict,
    VerdictKind,
    classify,
    minimally_nonalternating,
    mirror,
    parse_dt,
    parse_pd,
    render_svg,
    render_text,
    square_determinant,
    two_bridge,
    verify_certificate,
)

__all__ = [
    "Diagram",
    "Verdict",
    "VerdictKind",
    "classify",
    "minimally_nonalternating",
    "mirror",
    "parse_dt",
    "parse_pd",
    "render_svg",
    "render_text",
    "square_determinant",
    "two_bridge",
    "verify_certificate",
]
