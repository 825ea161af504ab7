"""The two input DSLs: round-trips, word grammar, error positions."""

import pytest

from nilrep.errors import ParseError, UnsupportedType
from nilrep.groups import (DirectProduct, FiniteAbelian, FreeAbelian,
                           FreeNilpotent, Heisenberg, Presented, abelianize,
                           commutator, concat, gen, heisenberg_presentation,
                           power)
from nilrep.parsing import parse_group_spec, parse_reductive_spec
from nilrep.rootdata import Factor, ReductiveSpec


def test_catalog_atoms():
    assert parse_group_spec("H3") == Heisenberg()
    assert parse_group_spec("F(2,3)") == FreeNilpotent(2, 3)
    assert parse_group_spec("F(2, 3)") == FreeNilpotent(2, 3)
    assert parse_group_spec("Z^4") == FreeAbelian(4)
    assert parse_group_spec("Z") == FreeAbelian(1)
    assert parse_group_spec("Z/6") == FiniteAbelian((6,))
    assert parse_group_spec("Z/1") == FiniteAbelian(())


def test_products():
    g = parse_group_spec("H3 x Z^2 x Z/2")
    assert g == DirectProduct((Heisenberg(), FreeAbelian(2),
                               FiniteAbelian((2,))))


def test_presentation_words():
    g = parse_group_spec("<x,y | [x,y]>")
    assert isinstance(g, Presented)
    assert g.presentation.generator_count == 2
    assert g.presentation.relators == (commutator(gen(0), gen(1)),)
    assert abelianize(g).rank == 2

    g = parse_group_spec("<x | x^3>")
    assert g.presentation.relators == (power(gen(0), 3),)

    g = parse_group_spec("<x,y,z | [x,y]z^-1, [x,z], [y,z]>")
    assert g.presentation.relators == heisenberg_presentation().relators

    g = parse_group_spec("<a,b | a^2b^-3, [a,[a,b]]>")
    w = g.presentation.relators[0]
    assert w == concat(power(gen(0), 2), power(gen(1), -3))
    nested = g.presentation.relators[1]
    assert nested == commutator(gen(0), commutator(gen(0), gen(1)))


def test_multicharacter_generator_names():
    g = parse_group_spec("<x1,x2 | [x1,x2]>")
    assert g.presentation.generator_count == 2
    assert g.presentation.relators == (commutator(gen(0), gen(1)),)


def test_group_round_trips():
    specs = [
        Heisenberg(), FreeNilpotent(3, 2), FreeAbelian(5), FiniteAbelian((4,)),
        DirectProduct((Heisenberg(), FreeAbelian(1), FiniteAbelian((2,)))),
    ]
    for spec in specs:
        assert parse_group_spec(str(spec)) == spec
    presented = parse_group_spec("<x,y | [x,y]y^2>")
    again = parse_group_spec(str(presented))
    assert again.presentation == presented.presentation


def test_group_parse_errors_have_positions():
    with pytest.raises(ParseError) as info:
        parse_group_spec("F(2,3) y H3")
    assert info.value.position == 7
    with pytest.raises(ParseError):
        parse_group_spec("")
    with pytest.raises(ParseError):
        parse_group_spec("<x,y | [x,w]>")
    with pytest.raises(ParseError):
        parse_group_spec("<x,x | x^2>")
    with pytest.raises(ParseError):
        parse_group_spec("Z^")


def test_reductive_atoms():
    assert parse_reductive_spec("SL2") == ReductiveSpec((Factor("SL", 2),))
    assert parse_reductive_spec("Sp4") == ReductiveSpec((Factor("Sp", 4),))
    assert parse_reductive_spec("Spin7") == ReductiveSpec((Factor("Spin", 7),))
    assert parse_reductive_spec("G2") == ReductiveSpec((Factor("G2"),))
    assert parse_reductive_spec("GL3 x T2") == ReductiveSpec(
        (Factor("GL", 3), Factor("T", 2)))


def test_reductive_round_trips():
    for text in ("SL2", "GL3 x T2", "Sp4", "PGL3 x SO5 x F4", "Spin6"):
        spec = parse_reductive_spec(text)
        assert parse_reductive_spec(str(spec)) == spec
        assert str(spec) == text


def test_reductive_errors():
    with pytest.raises(ParseError):
        parse_reductive_spec("E8")
    with pytest.raises(UnsupportedType):
        parse_reductive_spec("Sp3")
    with pytest.raises(UnsupportedType):
        parse_reductive_spec("SO2")
    with pytest.raises(ParseError):
        parse_reductive_spec("SL2 x")
    with pytest.raises(ParseError):
        parse_reductive_spec("SL2 GL3")
