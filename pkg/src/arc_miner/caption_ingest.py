"""Caption track parsing and corpus assembly.

Caption input is the timed-text element form: a UTF-8 file of
``<text start="S" dur="D">...</text>`` elements. Parsing strips markup,
decodes the five predefined entities, and joins cue texts into one
continuous string per document.
"""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path

from .errors import CaptionParseError, InputError

MIN_TOKEN_COUNT = 10

GENDER_CATEGORIES = ("family", "female", "male", "unknown")

CAPTION_EXTENSION = ".xml"

_TEXT_ELEMENT = re.compile(r"<text\b([^>]*)>(.*?)</text>", re.DOTALL)
_ATTR = re.compile(r'([A-Za-z_:][-A-Za-z0-9_:.]*)\s*=\s*"([^"]*)"')
_TAG = re.compile(r"</?[A-Za-z][^>]*>")

# &amp; must be decoded last so that "&amp;lt;" yields the literal "&lt;".
_ENTITIES = (
    ("&lt;", "<"),
    ("&gt;", ">"),
    ("&quot;", '"'),
    ("&#39;", "'"),
    ("&amp;", "&"),
)


@dataclass(frozen=True)
class CaptionCue:
    start: float
    duration: float
    text: str


@dataclass
class Transcript:
    id: str
    channel_id: str
    gender_category: str
    upload_date: date
    view_count: int
    days_online: int
    text: str
    token_count: int

    def to_record(self) -> dict:
        # Field order is part of the corpus wire format; keep it fixed.
        return {
            "id": self.id,
            "channel_id": self.channel_id,
            "gender_category": self.gender_category,
            "upload_date": self.upload_date.isoformat(),
            "view_count": self.view_count,
            "days_online": self.days_online,
            "text": self.text,
            "token_count": self.token_count,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Transcript":
        return cls(
            id=rec["id"],
            channel_id=rec["channel_id"],
            gender_category=rec["gender_category"],
            upload_date=date.fromisoformat(rec["upload_date"]),
            view_count=int(rec["view_count"]),
            days_online=int(rec["days_online"]),
            text=rec["text"],
            token_count=int(rec["token_count"]),
        )


@dataclass(frozen=True)
class IngestError:
    id: str
    reason: str


def _decode_entities(s: str) -> str:
    for entity, char in _ENTITIES:
        s = s.replace(entity, char)
    return s


def parse_caption_file(raw: str) -> list[CaptionCue]:
    """Parse a caption track into cues, in document order.

    Raises CaptionParseError naming the element index on the first
    malformed element; a broken file is rejected, never truncated.
    """
    cues = []
    for index, match in enumerate(_TEXT_ELEMENT.finditer(raw)):
        attrs = dict(_ATTR.findall(match.group(1)))
        if "start" not in attrs:
            raise CaptionParseError(
                f"element {index}: missing start attribute", element_index=index
            )
        if "dur" not in attrs:
            raise CaptionParseError(
                f"element {index}: missing dur attribute", element_index=index
            )
        try:
            start = float(attrs["start"])
            duration = float(attrs["dur"])
        except ValueError:
            raise CaptionParseError(
                f"element {index}: unparseable start/dur number", element_index=index
            ) from None
        if start < 0 or duration < 0:
            raise CaptionParseError(
                f"element {index}: negative start or dur", element_index=index
            )
        body = _decode_entities(_TAG.sub(" ", match.group(2)))
        cues.append(CaptionCue(start=start, duration=duration, text=body))
    return cues


def merge_cues(cues: list[CaptionCue]) -> str:
    """Join cue texts into one continuous string, whitespace collapsed."""
    parts = (" ".join(cue.text.split()) for cue in cues)
    return " ".join(p for p in parts if p)


def build_corpus(
    caption_dir: str | Path, meta_path: str | Path
) -> tuple[list[Transcript], list[IngestError]]:
    """Join caption files with the metadata table into Transcript records.

    Metadata is a CSV with columns id, channel_id, gender_category,
    upload_date, view_count, retrieved_date (ISO dates). Caption files are
    named ``<id>.xml``. Transcripts shorter than MIN_TOKEN_COUNT tokens are
    dropped and reported. Mismatched ids become IngestError entries;
    duplicate metadata ids are a hard error.
    """
    from .sentiment import tokenize

    caption_dir = Path(caption_dir)
    rows = _read_meta(meta_path)

    transcripts: list[Transcript] = []
    errors: list[IngestError] = []
    seen_files = set()

    for row in rows:
        doc_id = row["id"]
        path = caption_dir / f"{doc_id}{CAPTION_EXTENSION}"
        if not path.is_file():
            errors.append(IngestError(doc_id, "missing caption file"))
            continue
        seen_files.add(path.name)
        try:
            cues = parse_caption_file(path.read_text(encoding="utf-8"))
        except CaptionParseError as exc:
            errors.append(IngestError(doc_id, f"caption parse failure: {exc}"))
            continue
        if not cues:
            errors.append(IngestError(doc_id, "empty caption track"))
            continue
        text = merge_cues(cues)
        tokens = tokenize(text)
        if len(tokens) < MIN_TOKEN_COUNT:
            errors.append(IngestError(doc_id, "below minimum length"))
            continue
        days_online = max(1, (row["retrieved_date"] - row["upload_date"]).days)
        transcripts.append(
            Transcript(
                id=doc_id,
                channel_id=row["channel_id"],
                gender_category=row["gender_category"],
                upload_date=row["upload_date"],
                view_count=row["view_count"],
                days_online=days_online,
                text=text,
                token_count=len(tokens),
            )
        )

    for path in sorted(caption_dir.glob(f"*{CAPTION_EXTENSION}")):
        if path.name not in seen_files:
            errors.append(IngestError(path.stem, "caption file without metadata row"))

    return transcripts, errors


def _read_meta(meta_path: str | Path) -> list[dict]:
    required = {
        "id",
        "channel_id",
        "gender_category",
        "upload_date",
        "view_count",
        "retrieved_date",
    }
    rows = []
    seen_ids = set()
    with open(meta_path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not required.issubset(reader.fieldnames):
            missing = sorted(required - set(reader.fieldnames or []))
            raise InputError(f"metadata table missing columns: {', '.join(missing)}")
        for row in reader:
            doc_id = row["id"].strip()
            if doc_id in seen_ids:
                raise InputError(f"duplicate transcript id in metadata: {doc_id!r}")
            seen_ids.add(doc_id)
            gender = row["gender_category"].strip().lower()
            if gender not in GENDER_CATEGORIES:
                raise InputError(
                    f"unknown gender_category {gender!r} for id {doc_id!r}"
                )
            view_count = int(row["view_count"])
            if view_count < 0:
                raise InputError(f"negative view_count for id {doc_id!r}")
            rows.append(
                {
                    "id": doc_id,
                    "channel_id": row["channel_id"].strip(),
                    "gender_category": gender,
                    "upload_date": date.fromisoformat(row["upload_date"].strip()),
                    "view_count": view_count,
                    "retrieved_date": date.fromisoformat(row["retrieved_date"].strip()),
                }
            )
    return rows


def write_corpus(transcripts: list[Transcript], path: str | Path) -> None:
    """Write a corpus as one JSON object per line, fixed field order."""
    with open(path, "w", encoding="utf-8") as fh:
        for t in transcripts:
            fh.write(json.dumps(t.to_record(), ensure_ascii=False) + "\n")


def read_corpus(path: str | Path) -> list[Transcript]:
    transcripts = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                transcripts.append(Transcript.from_record(json.loads(line)))
    return transcripts
