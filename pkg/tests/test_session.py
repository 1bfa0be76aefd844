import pytest
from pydantic import ValidationError

from monoideal.cli.builtins import names
from monoideal.cli.render import render_text
from monoideal.cli.session import Session, SessionConfig
from monoideal.config.settings import settings
from monoideal.core.errors import (
    AmbientMismatchError,
    DslTypeError,
    InputFormatError,
    PreconditionError,
    ResourceLimitError,
    UnboundNameError,
    VariableIndexError,
    ZeroDivisorError,
)
from monoideal.core.ideal import MonomialIdeal

SAMPLES = {
    "closure": "closure(I)",
    "radical": "radical(I)",
    "saturate": "saturate(I, <x2>)",
    "symbolic": "symbolic(I, 2)",
    "minprimes": "minprimes(I)",
    "assprimes": "assprimes(I)",
    "jlocal": "jlocal(I, <x1>)",
    "polarize": "polarize(I)",
    "depolarize": "depolarize(polarize(<x1^2, x1*x2^2>))",
    "analyze": "analyze(<x1^2, x1*x2^2>)",
    "gen": 'gen("strongly-stable")',
    "is_borel_type": "is_borel_type(I)",
    "is_borel_fixed": "is_borel_fixed(I)",
    "is_strongly_stable": "is_strongly_stable(I)",
    "is_lexsegment": "is_lexsegment(I)",
    "is_universal_lexsegment": "is_universal_lexsegment(I)",
    "is_sqfree_strongly_stable": "is_sqfree_strongly_stable(<x1*x2>)",
    "is_stably_lexsegment": "is_stably_lexsegment(I, 2)",
    "almost_regular": "almost_regular(I)",
    "depth_ul": "depth_ul(<x1, x2>)",
    "contains": "contains(I, <x1^3>)",
    "is_integral": "is_integral(<x1*x2>, I)",
    "oracle": "oracle(<x1*x2>, I)",
    "exponent_vector": "exponent_vector(I)",
    "complex": "complex(I)",
    "dual": "dual(complex(I))",
    "stanley_reisner": "stanley_reisner(complex(I))",
    "radical_dual": "radical_dual(I)",
    "irreducible": "irreducible(I)",
    "symbolic_sqfree": "symbolic_sqfree(<x1*x2>, 2)",
    "symbolic_eq": "symbolic_eq(I, 2)",
    "order_check": "order_check(I, 3)",
    "intersect": "intersect(I, <x2>)",
    "colon": "colon(I, <x2>)",
    "is_borel_type_primes": "is_borel_type_primes(I)",
    "symbolic_by_powers": "symbolic_by_powers(I, 2)",
    "compare": "compare(<x1*x2>, <x1^2>)",
    "restrict": "restrict(<x1^2*x2*x3>, <x1, x3>)",
    "b_degree": "b_degree(<x1^2*x2>, <x1>)",
    "lattice": "lattice(<x1^2*x2>, <x1*x3>)",
    "load": 'load("{path}")',
}


def run(script, **config):
    return Session(SessionConfig(**config)).run(script)


def test_every_builtin_has_a_sample():
    assert set(SAMPLES) == set(names())


@pytest.mark.parametrize("name", sorted(SAMPLES))
def test_builtin_evaluates(name, tmp_path):
    path = tmp_path / "ideal.json"
    path.write_text('{"nvars": 3, "gens": [[0, 1, 0], [1, 0, 0]]}')
    sample = SAMPLES[name].format(path=path)
    (value,) = run(f"ring 3; I = <x1^2, x1*x2>; {sample}")
    assert render_text(value)


def test_colon_script():
    values = run("ring 3; I = <x1^3, x1*x2^2>; I : <x2>; is_borel_fixed(I, 2)")
    assert [render_text(v) for v in values] == ["<x1^3, x1*x2>", "true"]


def test_ring_size_is_inferred():
    (value,) = run("<x1*x3> + <x2>")
    assert value.nvars == 3


def test_unbound_name():
    with pytest.raises(UnboundNameError) as excinfo:
        run("ring 2; J")
    assert excinfo.value.expression == "J"


def test_argument_kinds_are_checked():
    with pytest.raises(DslTypeError):
        run("ring 2; closure(3)")
    with pytest.raises(DslTypeError):
        run("ring 2; <x1> + 2")
    with pytest.raises(DslTypeError):
        run("ring 2; contains(<x1>, <x1, x2>)")


def test_variable_outside_ring():
    with pytest.raises(VariableIndexError):
        run("ring 2; <x3>")


def test_error_names_innermost_expression():
    with pytest.raises(ZeroDivisorError) as excinfo:
        run("ring 2; (<x1> : <>) + <x2>")
    assert excinfo.value.expression == "<x1> : <>"
    assert str(excinfo.value).endswith("(in <x1> : <>)")


def test_resource_limit():
    settings.MAX_TERMS = 3
    with pytest.raises(ResourceLimitError):
        run("ring 2; <x1, x2>^2")


def test_ring_change_drops_bindings():
    session = Session(SessionConfig())
    session.run("ring 2; I = <x1>")
    session.run("ring 3")
    assert session.bindings == {}
    with pytest.raises(UnboundNameError):
        session.run("I")


def test_bindings_survive_between_runs():
    session = Session(SessionConfig())
    session.run("ring 2; I = <x1^2>")
    (value,) = session.run("I * <x2>")
    assert value == MonomialIdeal.from_exponents([[2, 1]], 2)


def test_analytics_counts_operations():
    session = Session(SessionConfig())
    session.run("ring 2; <x1> + <x2>; closure(<x1^2>)")
    assert session.analytics.counts == {"sum": 1, "closure": 1}


def test_generation_follows_session_seed():
    script = 'ring 3; gen("strongly-stable")'
    assert run(script, seed=3) == run(script, seed=3)


def test_session_characteristic_is_the_default():
    script = "ring 3; is_borel_fixed(<x1^3, x1*x2^2>)"
    assert run(script, characteristic=2) == [True]
    assert run(script) == [False]


def test_config_rejects_composite_characteristic():
    with pytest.raises(ValidationError):
        SessionConfig(characteristic=4)


def test_monomial_builtins():
    values = run(
        "ring 3; compare(<x1*x2>, <x1^2>); "
        'compare(<x2^3>, <x1>, "graded-lex"); '
        "restrict(<x1^2*x2*x3>, <x1, x3>); b_degree(<x1^2*x2>, <x1>); "
        "lattice(<x1^2*x2>, <x1*x3>)"
    )
    assert [render_text(v) for v in values] == [
        "less",
        "greater",
        "<x1^2*x3>",
        "2",
        "(<x1>, <x1^2*x2*x3>, false)",
    ]
    with pytest.raises(PreconditionError):
        run('ring 2; compare(<x1>, <x2>, "revlex")')


def test_second_routes_are_reachable(identity_ideal):
    session = Session(SessionConfig())
    session.bindings["I"] = identity_ideal
    values = session.run("ring 3; is_borel_type_primes(I); symbolic_by_powers(I, 2)")
    assert [render_text(v) for v in values] == ["false", "<x1^2*x3^4>"]


def test_monomial_arguments_must_be_single_literals():
    with pytest.raises(DslTypeError):
        run("ring 2; contains(<x1^2>, <x1, x1^2>)")
    assert run("ring 2; u = <x1*x2>; contains(<x1>, u)") == [True]


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(payload)
    return path


def test_load_takes_the_ring_from_the_file(tmp_path):
    path = write(tmp_path, "ideal.json", '{"nvars": 2, "gens": [[1, 1], [2, 0]]}')
    session = Session(SessionConfig())
    (value,) = session.run(f'load("{path}")')
    assert str(value) == "<x1^2, x1*x2>"
    assert session.nvars == 2


def test_load_complex_and_polarized_ideal(tmp_path):
    complex_path = write(
        tmp_path, "complex.json", '{"nvars": 3, "minimal_nonfaces": [[3], [1]]}'
    )
    polarized_path = write(
        tmp_path,
        "polarized.json",
        '{"extension": [2, 2], "gens": [[[1, 1], [2, 1], [2, 2]], [[1, 1], [1, 2]]]}',
    )
    (complex_value,) = run(f'stanley_reisner(load("{complex_path}"))')
    (report,) = run(f'depolarize(load("{polarized_path}"))')
    assert render_text(complex_value) == "<x1, x3>"
    assert render_text(report) == "found 1 of predicted 4: [<x1^2, x1*x2^2>]"


def test_load_rejects_non_polarizations(tmp_path):
    path = write(tmp_path, "bad.json", '{"extension": [2], "gens": [[[1, 2]]]}')
    with pytest.raises(PreconditionError):
        run(f'depolarize(load("{path}"))')


def test_load_errors(tmp_path):
    ideal_path = write(tmp_path, "ideal.json", '{"nvars": 2, "gens": [[1, 0]]}')
    with pytest.raises(AmbientMismatchError):
        run(f'ring 3; load("{ideal_path}")')
    bad_path = write(tmp_path, "bad.json", '{"nvars": 2, "gens": [[1]]}')
    with pytest.raises(InputFormatError):
        run(f'load("{bad_path}")')
    with pytest.raises(InputFormatError):
        run(f'load("{tmp_path / "missing.json"}")')
