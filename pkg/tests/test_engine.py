import pytest

from spanmorph.engine import (
    FeatureBundle, GenQuery, Rule, analyze, generate, generate_paradigm, nominal_rule1,
    nominal_rule2, nominal_rule3, nominal_rule4, verb_compatible,
)
from spanmorph.errors import UnknownLemma
from spanmorph.featcodes import ALL_CODES, FinVerbFeatures, PersonNumber as PN, TenseMood as TM
from spanmorph.lexicon import (
    Category, Gender, NominalFeatures, Number, loads_lexicon, parse_entry,
)

from oracles import analysis_key, brute_analyze

imprim = parse_entry("vl\timprimir\tv\t3\t100\treg\timprim")
impres = parse_entry("vl\timprimir\tv\t3\t99\tpart1\timpres")
ido = parse_entry("vm\tnone\tpart\tnofin\t2,3\t99\treg\tido")
o_part = parse_entry("vm\tnone\tpart\tnofin\t2,3\t99\tpart1\to")
president = parse_entry("nl\tpresidente\tn\tmas2,fem\tplu1\t_\t_\tpresident")
doctor_nl = parse_entry("nl\tdoctor\tn\tfem\tno\tmasc\tsing\tdoctor")
doctor_wl = parse_entry("wl\tdoctor\tn\tplu2\tmasc\tsing\tdoctor")
bambu = parse_entry("wl\tbambú\tn\tplu1,plu2\tmasc\tsing\tbambú")
luc = parse_entry("nl\tluz\tn\tno\tplu2\tfem\tsing\tluc")
leon = parse_entry("nl\tleón\tn\tno\tplu2\tmasc\tsing\tleon")
ng_o = parse_entry("ng\tmas1\tmasc\tsing\to")
ng_a = parse_entry("ng\tfem\tfem\tsing\ta")
nn_s = parse_entry("nn\tplu1\tplu\ts")
nn_es = parse_entry("nn\tplu2\tplu\tes")

PART = FinVerbFeatures(PN.none, TM.part)


def nominal(g, n):
    return NominalFeatures(g, n)


def test_verb_compatible():
    assert verb_compatible(imprim, ido)
    assert not verb_compatible(impres, ido)
    assert verb_compatible(impres, o_part)
    assert not verb_compatible(imprim, o_part)


def test_verb_compatible_conjugation():
    amar = parse_entry("vl\tamar\tv\t1\t100\treg\tam")
    assert not verb_compatible(amar, ido)


def test_rule1():
    wl = nominal_rule1(president, ng_a)
    assert (wl.lemma, wl.surface, wl.gender, wl.number) == ("presidente", "presidenta", Gender.fem, Number.sing)
    assert {t.value for t in wl.number_types} == {"plu1"}
    assert nominal_rule1(president, ng_o) is None
    assert nominal_rule1(doctor_nl, ng_a).surface == "doctora"


def test_rule2():
    w = nominal_rule2(bambu, nn_s)
    assert w.surface == "bambús" and w.features == nominal(Gender.masc, Number.plu)
    assert nominal_rule2(doctor_wl, nn_es).surface == "doctores"
    assert nominal_rule2(doctor_wl, nn_s) is None


def test_rule3():
    w = nominal_rule3(luc, nn_es)
    assert w.surface == "luces" and w.features == nominal(Gender.fem, Number.plu)
    assert nominal_rule3(leon, nn_es).surface == "leones"
    assert nominal_rule3(leon, nn_s) is None
    assert nominal_rule3(luc, nn_s) is None


def test_rule4():
    w = nominal_rule4(doctor_wl)
    assert (w.lemma, w.category, w.features, w.surface) == (
        "doctor", Category.n, nominal(Gender.masc, Number.sing), "doctor")
    w = nominal_rule4(nominal_rule1(president, ng_a))
    assert w.features == nominal(Gender.fem, Number.sing) and w.lemma == "presidente"
    assert nominal_rule4(bambu).features == nominal(Gender.masc, Number.sing)


def bundles(analyses):
    return [(a.bundle.lemma, a.bundle.features, a.rule) for a in analyses]


def test_analyze_examples(lex):
    assert bundles(analyze(lex, "imprimido")) == [("imprimir", PART, Rule.VERB_REGULAR)]
    assert bundles(analyze(lex, "impreso")) == [("imprimir", PART, Rule.VERB_EXPLICIT)]
    assert sorted(b[1].number for b in bundles(analyze(lex, "crisis"))) == [Number.plu, Number.sing]
    assert analyze(lex, "impresido") == []


@pytest.mark.parametrize("word", ["impresido", "presidento", "abolo", "doctors", "abola", "hací",
                                  "salo", "saliré", "luzes", "leóns", "lloves", "hacido", "tenré"])
def test_rejections(lex, word):
    assert analyze(lex, word) == []


def test_courtesy_forms_report_imperative(lex):
    tms = {(a.bundle.features.person_number, a.bundle.features.tense_mood) for a in analyze(lex, "salga")}
    assert (PN.sing_3, TM.imper) in tms and (PN.sing_3, TM.pres_subj) in tms


def test_ambiguity_keeps_both(lex):
    lemmas = {a.bundle.lemma for a in analyze(lex, "fui")}
    assert lemmas == {"ser", "ir"}
    cats = {a.bundle.category for a in analyze(lex, "canto")}
    assert cats == {Category.v, Category.n}


def test_analyze_deterministic(lex):
    for w in ["fuera", "amamos", "canto", "presidentes"]:
        assert analyze(lex, w) == analyze(lex, w)


def test_analyze_matches_brute_force(lex):
    words = ["imprimido", "impreso", "presidentas", "doctores", "doctoras", "bambúes",
             "luces", "sal", "haz", "fuera", "crisis", "azules", "jóvenes", "salgo", "amamos"]
    for w in words:
        assert {analysis_key(a) for a in analyze(lex, w)} == brute_analyze(lex, w)


def surfaces(results):
    return {s for s, _ in results}


def test_generate_examples(lex):
    res = generate(lex, GenQuery("imprimir", tense_mood=TM.part))
    assert surfaces(res) == {"imprimido", "impreso"}
    assert generate(lex, GenQuery("abolir", person_number=PN.sing_1, tense_mood=TM.pres_ind)) == set()
    assert surfaces(generate(lex, GenQuery("bambú", number=Number.plu))) == {"bambús", "bambúes"}


def test_generate_unknown_lemma(lex):
    with pytest.raises(UnknownLemma):
        generate(lex, GenQuery("zzz"))
    with pytest.raises(UnknownLemma):
        generate_paradigm(lex, "zzz")


def test_generate_unbound_gender(lex):
    plain = generate(lex, GenQuery("azul", number=Number.sing))
    assert plain == {("azul", FeatureBundle("azul", Category.adj, nominal(None, Number.sing)))}
    fem = generate(lex, GenQuery("azul", gender=Gender.fem))
    assert fem == {
        ("azul", FeatureBundle("azul", Category.adj, nominal(Gender.fem, Number.sing))),
        ("azules", FeatureBundle("azul", Category.adj, nominal(Gender.fem, Number.plu))),
    }


def test_generate_category_filter(lex):
    assert surfaces(generate(lex, GenQuery("canto", category=Category.v))) == set()
    assert surfaces(generate(lex, GenQuery("canto", category=Category.n))) == {"canto", "cantos"}
    # verbal features never match nominal readings and vice versa
    assert generate(lex, GenQuery("canto", tense_mood=TM.pres_ind)) == set()
    assert generate(lex, GenQuery("cantar", gender=Gender.masc)) == set()


def test_homograph_lemma_generates_both_readings():
    lex = loads_lexicon(
        "vl\tbajar\tv\t1\t100\treg\tbaj\nvm\tnone\tinf\tnofin\t1\t00\treg\tar\n"
        "wl\tbajar\tn\tplu2\tmasc\tsing\tbajar\nnn\tplu2\tplu\tes\n"
    )
    res = generate(lex, GenQuery("bajar"))
    assert {b.category for _, b in res} == {Category.v, Category.n}
    assert surfaces(res) == {"bajar", "bajares"}


def test_paradigm_examples(lex):
    salir = generate_paradigm(lex, "salir").verbal
    assert salir[11] == {"salgo"}
    assert list(salir) == list(ALL_CODES)
    hacer = generate_paradigm(lex, "hacer").verbal
    assert hacer[99] == {"hecho"}
    llover = generate_paradigm(lex, "llover").verbal
    for code, forms in llover.items():
        if code in (0, 90, 99) or code % 10 == 3:
            assert forms, code
        else:
            assert not forms, code


def test_paradigm_nominal(lex):
    p = generate_paradigm(lex, "crisis")
    assert p.verbal is None
    assert p.nominal[(Gender.fem, Number.sing)] == {"crisis"}
    assert p.nominal[(Gender.fem, Number.plu)] == {"crisis"}
    assert p.nominal[(Gender.masc, Number.sing)] == set()
    p = generate_paradigm(lex, "presidente")
    assert p.nominal[(Gender.masc, Number.plu)] == {"presidentes"}


def test_paradigm_imperfect_subjunctive_has_both_series(lex):
    p = generate_paradigm(lex, "amar").verbal
    assert p[61] == {"amara", "amase"}
    assert p[64] == {"amáramos", "amásemos"}


# Forms checked by hand against standard conjugation tables.
REFERENCE = {
    "salir": {11: "salgo", 13: "sale", 41: "saldré", 53: "salga", 82: "sal", 85: "salid", 99: "salido"},
    "tener": {11: "tengo", 12: "tienes", 33: "tuvo", 41: "tendré", 82: "ten", 61: "tuviera"},
    "querer": {11: "quiero", 14: "queremos", 31: "quise", 41: "querré", 54: "queramos"},
    "decir": {11: "digo", 36: "dijeron", 41: "diré", 82: "di", 90: "diciendo", 99: "dicho"},
    "ser": {11: "soy", 21: "era", 31: "fui", 41: "seré", 51: "sea", 82: "sé", 99: "sido"},
    "ir": {11: "voy", 24: "íbamos", 41: "iré", 51: "vaya", 82: "ve", 90: "yendo"},
    "amar": {15: "amáis", 24: "amábamos", 33: "amó", 85: "amad", 90: "amando"},
    "comer": {13: "come", 46: "comerán", 76: "comerían", 86: "coman"},
}


@pytest.mark.parametrize("lemma", sorted(REFERENCE))
def test_reference_forms(lex, lemma):
    p = generate_paradigm(lex, lemma).verbal
    for code, form in REFERENCE[lemma].items():
        assert form in p[code], (code, p[code])
