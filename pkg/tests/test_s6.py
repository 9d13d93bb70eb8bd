from siegeldim import golden, s6


def test_sp4f2_order():
    assert len(s6.sp4f2()) == 720


def test_character_table_orthogonal():
    table = s6.character_table()
    s6.check_orthogonality(table)
    assert sorted(table.dims()) == [1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16]


def test_isomorphism_is_homomorphism():
    s6.check_homomorphism(s6.build_iso(), samples=200)


def test_conjugacy_table():
    assert s6.conjugacy_table() == golden.CONJUGACY


def test_fixed_table():
    assert s6.s6_fixed_table() == golden.S6_FIXED


def test_verify_report():
    rep = s6.verify()
    assert rep.ok, rep.failures()
