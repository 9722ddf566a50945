import pytest

from afrob import ArgumentationFramework, LabellingMismatch, Labelling, emit_dot


def test_plain_digraph(g3):
    rendered = emit_dot(g3)
    assert rendered == (
        'digraph af {\n'
        '  "1";\n'
        '  "2";\n'
        '  "3";\n'
        '  "4";\n'
        '  "1" -> "2";\n'
        '  "2" -> "3";\n'
        '}\n'
    )


def test_empty_digraph():
    assert emit_dot(ArgumentationFramework()) == "digraph af {\n}\n"


def test_labelled_digraph(g3):
    labelling = Labelling({"1", "3", "4"}, {"2"}, set())
    rendered = emit_dot(g3, labelling)
    assert '"1" [class="in"' in rendered
    assert '"3" [class="in"' in rendered
    assert '"4" [class="in"' in rendered
    assert '"2" [class="out"' in rendered
    assert rendered.count("->") == 2


def test_labelling_must_cover_arguments(g3):
    with pytest.raises(LabellingMismatch):
        emit_dot(g3, Labelling({"1"}, {"2"}, set()))


def test_output_is_deterministic(g3):
    assert emit_dot(g3) == emit_dot(g3)
