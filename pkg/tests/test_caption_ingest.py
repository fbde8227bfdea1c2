import json
from datetime import date

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arc_miner import (
    CaptionParseError,
    InputError,
    Transcript,
    build_corpus,
    merge_cues,
    parse_caption_file,
    read_corpus,
    write_corpus,
)
from arc_miner.caption_ingest import CaptionCue


class TestParseCaptionFile:
    def test_single_cue_with_entity(self):
        cues = parse_caption_file('<text start="0.12" dur="3.4">hello &amp; hi</text>')
        assert cues == [CaptionCue(0.12, 3.4, "hello & hi")]

    def test_empty_document(self):
        assert parse_caption_file("") == []
        assert parse_caption_file("<transcript></transcript>") == []

    def test_two_cues_in_order(self):
        raw = '<text start="0" dur="1">a b</text><text start="1" dur="1">c</text>'
        assert [c.text for c in parse_caption_file(raw)] == ["a b", "c"]

    def test_all_five_entities_decoded(self):
        raw = '<text start="0" dur="1">&lt;a&gt; &quot;b&#39;s&quot; &amp;</text>'
        assert parse_caption_file(raw)[0].text == "<a> \"b's\" &"

    def test_unknown_entity_passed_through(self):
        raw = '<text start="0" dur="1">caf&eacute;</text>'
        assert parse_caption_file(raw)[0].text == "caf&eacute;"

    def test_nested_tags_stripped(self):
        raw = '<text start="0" dur="1">a <b>bold</b> word</text>'
        assert merge_cues(parse_caption_file(raw)) == "a bold word"

    def test_missing_start_names_element_index(self):
        raw = '<text start="0" dur="1">ok</text><text dur="1">broken</text>'
        with pytest.raises(CaptionParseError) as exc:
            parse_caption_file(raw)
        assert exc.value.element_index == 1

    def test_unparseable_number_rejected(self):
        with pytest.raises(CaptionParseError):
            parse_caption_file('<text start="abc" dur="1">x</text>')

    def test_negative_start_rejected(self):
        with pytest.raises(CaptionParseError):
            parse_caption_file('<text start="-1" dur="1">x</text>')


class TestMergeCues:
    def test_basic_join(self):
        cues = [CaptionCue(0, 1, "a b"), CaptionCue(1, 1, "c")]
        assert merge_cues(cues) == "a b c"

    def test_empty(self):
        assert merge_cues([]) == ""

    def test_whitespace_collapse(self):
        cues = [CaptionCue(0, 1, "a  b "), CaptionCue(1, 1, " c")]
        assert merge_cues(cues) == "a b c"

    @given(st.lists(st.text(alphabet="ab \t\n", max_size=20), max_size=10))
    def test_merge_idempotent_under_rewrap(self, texts):
        merged = merge_cues([CaptionCue(0, 0, t) for t in texts])
        rewrapped = [CaptionCue(0, 0, w) for w in merged.split(" ") if w]
        assert merge_cues(rewrapped) == merged


@pytest.fixture
def corpus_dir(tmp_path):
    captions = tmp_path / "captions"
    captions.mkdir()
    words = " ".join(["hello world this is a fine long enough transcript ok"] * 2)
    for i in range(3):
        (captions / f"doc{i}.xml").write_text(
            f'<text start="0" dur="2">{words}</text>'
        )
    meta = tmp_path / "meta.csv"
    meta.write_text(
        "id,channel_id,gender_category,upload_date,view_count,retrieved_date\n"
        "doc0,chan_a,male,2018-01-01,1000,2018-01-11\n"
        "doc1,chan_a,male,2018-01-05,500,2018-01-11\n"
        "doc2,chan_b,female,2018-01-11,0,2018-01-11\n"
    )
    return captions, meta


class TestBuildCorpus:
    def test_three_matching_docs(self, corpus_dir):
        transcripts, errors = build_corpus(*corpus_dir)
        assert len(transcripts) == 3 and errors == []
        assert transcripts[0].days_online == 10

    def test_same_day_floors_days_online_to_one(self, corpus_dir):
        transcripts, _ = build_corpus(*corpus_dir)
        assert transcripts[2].days_online == 1

    def test_short_transcript_dropped(self, corpus_dir):
        captions, meta = corpus_dir
        (captions / "doc0.xml").write_text(
            '<text start="0" dur="1">only nine tokens are present in this tiny file</text>'
        )
        # 9 tokens -> dropped
        transcripts, errors = build_corpus(captions, meta)
        assert {t.id for t in transcripts} == {"doc1", "doc2"}
        assert any(e.id == "doc0" and e.reason == "below minimum length" for e in errors)

    def test_min_length_invariant(self, corpus_dir):
        transcripts, _ = build_corpus(*corpus_dir)
        assert all(t.token_count >= 10 for t in transcripts)

    def test_missing_caption_file_reported(self, corpus_dir):
        captions, meta = corpus_dir
        (captions / "doc1.xml").unlink()
        transcripts, errors = build_corpus(captions, meta)
        assert len(transcripts) == 2
        assert any(e.id == "doc1" and "missing caption" in e.reason for e in errors)

    def test_orphan_caption_file_reported(self, corpus_dir):
        captions, meta = corpus_dir
        (captions / "stray.xml").write_text('<text start="0" dur="1">x</text>')
        _, errors = build_corpus(captions, meta)
        assert any(e.id == "stray" for e in errors)

    def test_empty_track_rejected(self, corpus_dir):
        captions, meta = corpus_dir
        (captions / "doc0.xml").write_text("<transcript></transcript>")
        _, errors = build_corpus(captions, meta)
        assert any(e.id == "doc0" and e.reason == "empty caption track" for e in errors)

    def test_duplicate_meta_id_is_hard_error(self, corpus_dir):
        captions, meta = corpus_dir
        meta.write_text(
            "id,channel_id,gender_category,upload_date,view_count,retrieved_date\n"
            "doc0,chan_a,male,2018-01-01,1000,2018-01-11\n"
            "doc0,chan_a,male,2018-01-01,1000,2018-01-11\n"
        )
        with pytest.raises(InputError):
            build_corpus(captions, meta)

    def test_unknown_gender_rejected(self, corpus_dir):
        captions, meta = corpus_dir
        meta.write_text(
            "id,channel_id,gender_category,upload_date,view_count,retrieved_date\n"
            "doc0,chan_a,robot,2018-01-01,1000,2018-01-11\n"
        )
        with pytest.raises(InputError):
            build_corpus(captions, meta)


def test_corpus_round_trip(tmp_path, corpus_dir):
    transcripts, _ = build_corpus(*corpus_dir)
    path = tmp_path / "corpus.jsonl"
    write_corpus(transcripts, path)
    assert read_corpus(path) == transcripts
    # wire format: fixed field order, one object per line
    first = json.loads(path.read_text().splitlines()[0])
    assert list(first) == [
        "id", "channel_id", "gender_category", "upload_date",
        "view_count", "days_online", "text", "token_count",
    ]
