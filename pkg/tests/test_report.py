from covrough import analyze, enumerate_coverings, render_report, report_to_dict


class TestAnalyze:
    def test_classification_of_fixed_point(self, fixed_non_partition):
        r = analyze(fixed_non_partition)
        assert not r.classification.partition
        assert r.classification.irreducible
        assert r.classification.invariable
        assert r.classification.cov_fixed_point
        assert r.cov_equals_covering
        assert r.cov == fixed_non_partition

    def test_element_rows(self, nested_with_tail):
        r = analyze(nested_with_tail)
        by_name = {e.element: e for e in r.elements}
        assert by_name["3"].membership_degree == 2
        assert by_name["3"].core_block is None
        assert by_name["1"].core_block.members() == ("1", "2")
        assert by_name["3"].neighborhood.members() == ("3",)

    def test_block_rows(self, redundant_union, u3):
        r = analyze(redundant_union)
        by_bits = {b.block: b for b in r.blocks}
        union_block = by_bits[u3.block(["1", "2"])]
        assert union_block.witness is not None
        assert union_block.core_block_of == ()
        assert by_bits[u3.block(["1"])].core_block_of == ("1",)

    def test_lambda_only_on_request(self, chain_of_overlaps):
        assert analyze(chain_of_overlaps).lambda_matrix is None
        lam = analyze(chain_of_overlaps, include_lambda=True).lambda_matrix
        names = chain_of_overlaps.universe.names
        at = lambda x, y: lam[names.index(x)][names.index(y)]
        assert at("3", "4") == 2
        assert at("1", "3") == 0

    def test_invariable_always_matches_fixed_point_flag(self):
        for c in enumerate_coverings(3):
            r = analyze(c)
            assert r.classification.invariable == r.classification.cov_fixed_point


class TestReportDict:
    def test_schema(self, fixed_non_partition):
        d = report_to_dict(analyze(fixed_non_partition, include_lambda=True))
        assert set(d) == {
            "covering",
            "elements",
            "lambda",
            "blocks",
            "classification",
            "cov",
            "cov_equals_covering",
        }
        assert d["classification"] == {
            "partition": False,
            "irreducible": True,
            "invariable": True,
            "cov_fixed_point": True,
        }
        assert d["lambda"]["elements"] == ["1", "2", "3"]
        assert d["elements"][0] == {
            "element": "1",
            "membership_degree": 2,
            "neighborhood": ["1"],
            "core_block": ["1"],
        }

    def test_reducible_block_carries_witness(self, redundant_union):
        d = report_to_dict(analyze(redundant_union))
        rows = {tuple(row["block"]): row for row in d["blocks"]}
        assert rows[("1", "2")]["reducible"] is True
        assert rows[("1", "2")]["witness"] == [["1"], ["2"]]
        assert rows[("1",)]["reducible"] is False
        assert rows[("1",)]["witness"] is None


class TestRender:
    def test_deterministic(self, nested_with_tail):
        r = analyze(nested_with_tail, include_lambda=True)
        assert render_report(r) == render_report(analyze(nested_with_tail, include_lambda=True))

    def test_contains_verdicts_and_tables(self, fixed_non_partition):
        text = render_report(analyze(fixed_non_partition))
        assert "partition: no" in text
        assert "invariable: yes" in text
        assert "Cov(C)=C: yes" in text
        assert "equal to the covering" in text
        assert "{1, 2}" in text

    def test_missing_core_block_is_marked(self, overlapping_pair, triangle):
        text = render_report(analyze(overlapping_pair))
        assert "| -" in text  # the shared element has no core block
        text = render_report(analyze(triangle))
        assert "none" in text  # no block here is anybody's core block
