import json

from hypothesis import given
from hypothesis import strategies as st

from weakll import serialize
from weakll.exponential import MonomialSeq, random_seq
from weakll.exponential_nonunit import NonUnitSeq
from weakll.generators import random_linmap, random_space, rng_for
from weakll.monomials import random_monomial
from weakll.spaces import UNIT, Bang, Base, LinMap

seeds = st.integers(0, 10 ** 6)


def test_linmap_json_shape():
    f = LinMap.from_rows(Base(2), UNIT, [["1/2", -3]])
    obj = serialize.to_json(f)
    assert obj == {"type": "linmap", "dom": {"kind": "base", "dim": 2}, "cod": {"kind": "base", "dim": 1},
                   "rows": 1, "cols": 2, "entries": [["1/2", "-3"]]}
    assert serialize.loads(json.dumps(obj)) == f


@given(seeds)
def test_roundtrips(seed):
    rng = rng_for(seed, "ser")
    s = random_space(rng, 6)
    assert serialize.loads(serialize.dumps(s)) == s
    f = random_linmap(rng, s, Base(2))
    assert serialize.loads(serialize.dumps(f)) == f
    m = random_monomial(rng, Base(2), Base(2), 3)
    assert serialize.loads(serialize.dumps(m)) == m
    for cls in (MonomialSeq, NonUnitSeq):
        q = random_seq(rng, Base(2), UNIT, 2, cls)
        back = serialize.loads(serialize.dumps(q))
        assert type(back) is cls and back == q


def test_graded_space_json():
    b = Bang(Base(2), 3)
    assert serialize.to_json(b) == {"kind": "bang", "of": {"kind": "base", "dim": 2}, "degree": 3}
