import hypothesis.strategies as st

from superschur.laurent import LaurentPoly, VarTable

TABLE2 = VarTable(["x", "y"])


@st.composite
def partitions(draw, max_size=10):
    n = draw(st.integers(min_value=0, max_value=max_size))
    parts = []
    cap = n
    while n > 0:
        p = draw(st.integers(min_value=1, max_value=min(cap, n)))
        parts.append(p)
        cap = p
        n -= p
    return tuple(parts)


@st.composite
def laurent_polys(draw, table=TABLE2, max_terms=5, max_exp=3, max_coeff=5):
    n_terms = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(draw(st.integers(min_value=-max_exp, max_value=max_exp))
                     for _ in range(len(table)))
        coeff = draw(st.integers(min_value=-max_coeff, max_value=max_coeff))
        if coeff:
            terms[exps] = terms.get(exps, 0) + coeff
    return LaurentPoly(table, terms)
