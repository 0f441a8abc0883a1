import xml.etree.ElementTree as ET

import pytest

from hdthompson.pattern import example_pattern, pattern_of_word
from hdthompson.render import rectangles_per_square, render_pattern
from hdthompson.words import parse_word


def test_example_svg():
    p = example_pattern()
    svg = render_pattern(p, 5)
    root = ET.fromstring(svg.split("\n", 1)[1])
    texts = [t.text for t in root.iter("{http://www.w3.org/2000/svg}text")]
    numbers = sorted(int(t) for t in texts if t.isdigit())
    assert numbers == list(range(10))
    assert rectangles_per_square(p, 5) == [3, 1, 4, 1, 1]


def test_deterministic():
    p = pattern_of_word(parse_word("v0 h1 s0", "pi"))
    assert render_pattern(p, 3) == render_pattern(p, 3)


def test_bad_square_count():
    with pytest.raises(ValueError):
        render_pattern(example_pattern(), 0)
