"""
Wiring-diagram rendering: plain text and SVG.

Both renderers draw the word's n wires as horizontal rows labelled with the
starting values on the left and the final values on the right; crossing t sits
between rows w_t and w_t+1 at the t-th time column.  Output is a pure function
of the input: the same word and spec always produce identical bytes.

SVG crossings carry stable identifiers ``crossing-<t>`` so a client can
address them; highlighted crossings get the ``highlight`` class (text mode
uses ``*`` instead of ``X``).
"""

from dataclasses import dataclass, field

from .errors import DomainError
from .perms import Word, degree_of, perm_from_word
from .littlemap import wiring_diagram

__all__ = ["RenderSpec", "render_wiring_ascii", "render_wiring_svg"]


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"  # "ascii" | "svg"
    highlight: frozenset[int] = field(default_factory=frozenset)
    labels: bool = True


def _check_spec(word: Word, spec: RenderSpec) -> None:
    if spec.format not in ("ascii", "svg"):
        raise DomainError(f"unknown render format {spec.format!r}")
    bad = [t for t in spec.highlight if not 1 <= t <= len(word)]
    if bad:
        raise DomainError(f"highlight indices {sorted(bad)} outside 1..{len(word)}")


def render_wiring_ascii(word: Word, spec: RenderSpec = RenderSpec()) -> str:
    """Rows of wires with an X (or * when highlighted) between the crossing rows.

    >>> print(render_wiring_ascii((1,)))
    1 --- 2
       X
    2 --- 1
    """
    _check_spec(word, spec)
    n = degree_of(word)
    m = len(word)
    final = perm_from_word(word)
    width = 2 * m + 1
    label_w = len(str(n))
    lines = []
    for r in range(1, n + 1):
        left = f"{r:>{label_w}} " if spec.labels else ""
        right = f" {final[r - 1]}" if spec.labels else ""
        lines.append(left + "-" * width + right)
        if r < n:
            gap = [" "] * width
            for t, letter in enumerate(word, 1):
                if letter == r:
                    gap[2 * t - 1] = "*" if t in spec.highlight else "X"
            pad = " " * (label_w + 1) if spec.labels else ""
            lines.append((pad + "".join(gap)).rstrip())
    return "\n".join(lines)


def _fmt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else f"{x:g}"


_SVG_STYLE = (
    ".wire{fill:none;stroke:#345;stroke-width:0.08}"
    ".crossing{fill:transparent;stroke:none;cursor:pointer}"
    ".crossing.highlight{fill:#fa0;fill-opacity:0.35}"
    ".label{font-family:monospace;font-size:0.5px;fill:#111}"
)


def render_wiring_svg(word: Word, spec: RenderSpec = RenderSpec(format="svg")) -> str:
    """One path per wire (id wire-<start value>), one addressable box per crossing."""
    _check_spec(word, spec)
    diagram = wiring_diagram(word)
    n, m = diagram.n, len(word)
    parts = []
    x0, x1 = -1.5, m + 1.5
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0)} 0 {_fmt(x1 - x0)} {_fmt(n + 1)}" '
        f'width="{_fmt((x1 - x0) * 40)}" height="{_fmt((n + 1) * 40)}">'
    )
    parts.append(f"<style>{_SVG_STYLE}</style>")
    # position of value k at time t
    rows = [{v: r + 1 for r, v in enumerate(state)} for state in diagram.states]
    for k in range(1, n + 1):
        points = [(-0.5, rows[0][k])]
        points += [(float(t), rows[t][k]) for t in range(m + 1)]
        points.append((m + 0.5, rows[m][k]))
        d = "M" + " L".join(f"{_fmt(x)} {_fmt(y)}" for x, y in points)
        parts.append(f'<path id="wire-{k}" class="wire" d="{d}"/>')
    for t, letter in enumerate(word, 1):
        cls = "crossing highlight" if t in spec.highlight else "crossing"
        parts.append(
            f'<rect id="crossing-{t}" class="{cls}" '
            f'x="{_fmt(t - 1)}" y="{_fmt(letter)}" width="1" height="1"/>'
        )
    if spec.labels:
        for r in range(1, n + 1):
            parts.append(
                f'<text class="label" x="-1.3" y="{_fmt(r + 0.15)}">{r}</text>'
            )
            parts.append(
                f'<text class="label" x="{_fmt(m + 0.8)}" y="{_fmt(r + 0.15)}">'
                f"{diagram.states[-1][r - 1]}</text>"
            )
    parts.append("</svg>")
    return "".join(parts)
