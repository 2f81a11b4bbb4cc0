import json

from kgkit.cli import main

from helpers import ALLERGEN_TTL, EDU, GLUTEN_FREE_QUERY

CITY_TTL = f"""
@prefix edu: <{EDU}> .
edu:City rdfs:subClassOf edu:Locality .
edu:Warsaw a edu:City .
"""

FATHERS_TTL = f"""
@prefix edu: <{EDU}> .
edu:Ola edu:has_father edu:Jan .
edu:Ola edu:has_father edu:Marcin .
edu:has_father rdf:type owl:FunctionalProperty .
"""

PUMPKIN_TTL = f"""
@prefix edu: <{EDU}> .
edu:Herbivore owl:disjointWith edu:Carnivore .
edu:Pumpkin a edu:Carnivore , edu:Herbivore .
"""

FUNCTIONAL_LISTING_TTL = """
:has_father rdf:type owl:ObjectProperty ,
                 owl:FunctionalProperty .
"""

PURCHASES_CSV = """Buyer,Seller,Product,Number of pieces
Marcin Kowalski,Shop1,Natural yoghurt,5
Aleksandra Nowak,Shop2,Butter,2
"""

PURCHASE_SPEC = f"""
class: {EDU}Purchase
namespace: {EDU}
role: Product -> {EDU}product
role: Number of pieces -> {EDU}number_of_pieces
role: Buyer -> {EDU}buyer
role: Seller -> {EDU}seller
literal: Number of pieces
"""


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_parse_turtle_listing_to_canonical_ntriples(tmp_path, capsys):
    kb = write(tmp_path / "listing.ttl", FUNCTIONAL_LISTING_TTL)
    assert main(["parse", kb]) == 0
    out = capsys.readouterr().out
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 2
    assert all(l.endswith(" .") for l in lines)
    assert lines == sorted(lines)


def test_parse_malformed_line_exits_2(tmp_path, capsys):
    kb = write(tmp_path / "bad.nt", f"<{EDU}a> <{EDU}p> <{EDU}b> .\n<{EDU}a> <{EDU}p>\n")
    assert main(["parse", kb]) == 2
    assert "line 2" in capsys.readouterr().err


def test_parse_missing_file_exits_1(tmp_path):
    assert main(["parse", str(tmp_path / "absent.nt")]) == 1


def test_infer_rdfs_derived_only_exact_line(tmp_path, capsys):
    kb = write(tmp_path / "city.ttl", CITY_TTL)
    assert main(["infer", kb, "--profile", "rdfs", "--derived-only"]) == 0
    out = capsys.readouterr().out
    assert out == (
        f"<{EDU}Warsaw> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <{EDU}Locality> .\n"
    )


def test_infer_owl_derives_sameas(tmp_path, capsys):
    kb = write(tmp_path / "fathers.ttl", FATHERS_TTL)
    assert main(["infer", kb, "--profile", "owl"]) == 0
    out = capsys.readouterr().out
    assert f"<{EDU}Jan> <http://www.w3.org/2002/07/owl#sameAs> <{EDU}Marcin> ." in out


def test_infer_inconsistent_kb_exits_3_with_report(tmp_path, capsys):
    kb = write(tmp_path / "pumpkin.ttl", PUMPKIN_TTL)
    assert main(["infer", kb, "--profile", "owl"]) == 3
    captured = capsys.readouterr()
    assert "owl-disjoint-classes" in captured.err
    assert captured.out  # closure still emitted


def test_check_consistent_and_inconsistent(tmp_path, capsys):
    good = write(tmp_path / "city.ttl", CITY_TTL)
    assert main(["check", good]) == 0
    assert capsys.readouterr().out.strip() == "consistent"
    bad = write(tmp_path / "pumpkin.ttl", PUMPKIN_TTL)
    assert main(["check", bad]) == 3
    assert capsys.readouterr().out.strip().startswith("inconsistent")


def test_check_json_renders_structured_violations(tmp_path, capsys):
    bad = write(tmp_path / "pumpkin.ttl", PUMPKIN_TTL)
    assert main(["check", bad, "--json"]) == 3
    payload = json.loads(capsys.readouterr().out)
    assert payload["consistent"] is False
    assert payload["violations"]
    record = payload["violations"][0]
    assert record["rule"] == "owl-disjoint-classes"
    assert all(len(t) == 3 for t in record["triples"])


def test_check_competency_table_not_fatal(tmp_path, capsys):
    kb = write(tmp_path / "allergens.ttl", ALLERGEN_TTL)
    questions = write(
        tmp_path / "competency.txt",
        """
QUERY gluten-free-products
PREFIX edu: <http://example.edu#>
ASSUME closed
?x a edu:Product
NOT { ?x edu:contains_allergen edu:gluten }

QUERY unanswerable
PREFIX edu: <http://example.edu#>
?x a edu:Starship
""",
    )
    assert main(["check", kb, "--competency", questions]) == 0
    out = capsys.readouterr().out
    assert "PASS\tgluten-free-products" in out
    assert "FAIL\tunanswerable" in out


def test_query_closed_world_json(tmp_path, capsys):
    kb = write(tmp_path / "allergens.ttl", ALLERGEN_TTL)
    qf = write(tmp_path / "q.txt", GLUTEN_FREE_QUERY)
    assert main(["query", kb, qf]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows == [
        {"x": f"<{EDU}Cream>"},
        {"x": f"<{EDU}DarkSoySauce>"},
        {"x": f"<{EDU}Peanuts>"},
    ]


def test_query_open_world_negation_exits_4(tmp_path, capsys):
    kb = write(tmp_path / "allergens.ttl", ALLERGEN_TTL)
    qf = write(tmp_path / "q.txt", GLUTEN_FREE_QUERY.replace("ASSUME closed", "ASSUME open"))
    assert main(["query", kb, qf]) == 4
    assert "negation" in capsys.readouterr().err


def test_query_tsv_output(tmp_path, capsys):
    kb = write(tmp_path / "allergens.ttl", ALLERGEN_TTL)
    qf = write(tmp_path / "q.txt", GLUTEN_FREE_QUERY)
    assert main(["query", kb, qf, "--tsv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "?x"
    assert len(lines) == 4


def test_reify_table_two_rows(tmp_path, capsys):
    csv_path = write(tmp_path / "purchases.csv", PURCHASES_CSV)
    spec_path = write(tmp_path / "spec.txt", PURCHASE_SPEC)
    assert main(["reify", csv_path, "--spec", spec_path]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l]
    assert len(lines) == 10
    assert any("purchase1" in l and "NaturalYoghurt" in l for l in lines)
    assert any("purchase2" in l for l in lines)


def test_reify_empty_csv_exits_0(tmp_path, capsys):
    csv_path = write(tmp_path / "empty.csv", "Buyer,Seller,Product,Number of pieces\n")
    spec_path = write(tmp_path / "spec.txt", PURCHASE_SPEC)
    assert main(["reify", csv_path, "--spec", spec_path]) == 0
    assert capsys.readouterr().out == ""


def test_reify_missing_column_exits_1_naming_it(tmp_path, capsys):
    csv_path = write(tmp_path / "short.csv", "Buyer,Seller,Product\nA,B,C\n")
    spec_path = write(tmp_path / "spec.txt", PURCHASE_SPEC)
    assert main(["reify", csv_path, "--spec", spec_path]) == 1
    assert "Number of pieces" in capsys.readouterr().err


def test_usage_error_exits_1():
    assert main(["no-such-command"]) == 1


def embed_fixture(tmp_path) -> str:
    lines = []
    for i in range(8):
        lines.append(f"<{EDU}n{i}> <{EDU}next> <{EDU}n{(i + 1) % 8}> .")
        lines.append(f"<{EDU}n{(i + 1) % 8}> <{EDU}prev> <{EDU}n{i}> .")
    return write(tmp_path / "chain.nt", "\n".join(lines) + "\n")


def test_embed_train_deterministic_model_files(tmp_path):
    kb = embed_fixture(tmp_path)
    m1, m2 = str(tmp_path / "m1.tsv"), str(tmp_path / "m2.tsv")
    args = ["embed", "train", kb, "--dim", "6", "--epochs", "20", "--seed", "5"]
    assert main(args + ["--model", m1]) == 0
    assert main(args + ["--model", m2]) == 0
    assert open(m1, "rb").read() == open(m2, "rb").read()


def test_embed_seed_env_override(tmp_path, monkeypatch):
    kb = embed_fixture(tmp_path)
    m_env, m_flag, m_default = (str(tmp_path / n) for n in ("env.tsv", "flag.tsv", "default.tsv"))
    monkeypatch.setenv("KB_SEED", "5")
    assert main(["embed", "train", kb, "--dim", "4", "--epochs", "5", "--model", m_env]) == 0
    monkeypatch.delenv("KB_SEED")
    assert main(["embed", "train", kb, "--dim", "4", "--epochs", "5", "--seed", "5", "--model", m_flag]) == 0
    assert main(["embed", "train", kb, "--dim", "4", "--epochs", "5", "--model", m_default]) == 0
    assert open(m_env, "rb").read() == open(m_flag, "rb").read()
    assert open(m_env, "rb").read() != open(m_default, "rb").read()
    # flags beat the environment
    monkeypatch.setenv("KB_SEED", "99")
    m_both = str(tmp_path / "both.tsv")
    assert main(["embed", "train", kb, "--dim", "4", "--epochs", "5", "--seed", "5", "--model", m_both]) == 0
    assert open(m_both, "rb").read() == open(m_flag, "rb").read()


def test_embed_eval_reports_metrics(tmp_path, capsys):
    kb = embed_fixture(tmp_path)
    model = str(tmp_path / "m.tsv")
    test_file = write(tmp_path / "test.nt", f"<{EDU}n0> <{EDU}next> <{EDU}n1> .\n")
    assert main(["embed", "train", kb, "--dim", "6", "--epochs", "30", "--seed", "1", "--model", model]) == 0
    capsys.readouterr()
    assert main(["embed", "eval", kb, "--model", model, "--test", test_file]) == 0
    metrics = json.loads(capsys.readouterr().out)
    assert set(metrics) == {"mean_rank", "mrr", "hits_at_1", "hits_at_3", "hits_at_10"}
    assert metrics["mean_rank"] >= 1.0


def test_embed_predict_top_k_shape(tmp_path, capsys):
    kb = embed_fixture(tmp_path)
    model = str(tmp_path / "m.tsv")
    assert main(["embed", "train", kb, "--dim", "6", "--epochs", "10", "--seed", "1", "--model", model]) == 0
    capsys.readouterr()
    assert main(["embed", "predict", kb, "--model", model, "--head", f"{EDU}n0", "--relation", f"{EDU}next", "-k", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3
    for line in lines:
        term, value = line.split("\t")
        assert term.startswith("<")
        float(value)


def test_embed_predict_requires_exactly_one_free_slot(tmp_path, capsys):
    kb = embed_fixture(tmp_path)
    model = str(tmp_path / "m.tsv")
    assert main(["embed", "train", kb, "--dim", "4", "--epochs", "2", "--seed", "1", "--model", model]) == 0
    assert main(["embed", "predict", kb, "--model", model, "--relation", f"{EDU}next"]) == 1
