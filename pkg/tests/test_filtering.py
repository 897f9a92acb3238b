import json

import pytest

from nligen.filtering import (
    InvalidProbabilityVector,
    PredictionRecord,
    argmax_label,
    augment_with_generated,
    maxprob_filter,
    pseudo_label,
    read_predictions,
    validate_probs,
)
from nligen.compose import PHLTriplet


def rec(p, h, probs):
    return PredictionRecord(premise=p, hypothesis=h, probs=tuple(probs))


def test_validate_probs_accepts_good():
    validate_probs((0.9, 0.05, 0.05))
    validate_probs((1.0, 0.0, 0.0))
    validate_probs((0.3333, 0.3333, 0.3334))


def test_validate_probs_rejects_bad():
    with pytest.raises(InvalidProbabilityVector):
        validate_probs((0.5, 0.5))
    with pytest.raises(InvalidProbabilityVector):
        validate_probs((0.5, 0.4, 0.2))
    with pytest.raises(InvalidProbabilityVector):
        validate_probs((-0.1, 0.6, 0.5))
    with pytest.raises(InvalidProbabilityVector):
        validate_probs(("a", 0.5, 0.5))
    with pytest.raises(InvalidProbabilityVector):
        validate_probs((True, 0.0, 0.0))


def test_record_validates_on_construction():
    with pytest.raises(InvalidProbabilityVector):
        rec("p", "h", (0.2, 0.2, 0.2))


def test_argmax_positions():
    assert argmax_label((0.8, 0.1, 0.1)) == "E"
    assert argmax_label((0.1, 0.8, 0.1)) == "C"
    assert argmax_label((0.1, 0.1, 0.8)) == "N"


def test_argmax_tie_prefers_earlier():
    assert argmax_label((0.4, 0.4, 0.2)) == "E"
    assert argmax_label((0.2, 0.4, 0.4)) == "C"


def test_pseudo_label_fields():
    t = pseudo_label(rec("p", "h", (0.05, 0.9, 0.05)), source_id="pred:7")
    assert t == PHLTriplet(
        premise="p", hypothesis="h", label="C",
        transform="pseudo", source_id="pred:7", swapped=False,
    )


def test_maxprob_filter_threshold():
    records = [
        rec("p0", "h0", (0.95, 0.03, 0.02)),
        rec("p1", "h1", (0.50, 0.30, 0.20)),
        rec("p2", "h2", (0.05, 0.05, 0.90)),
    ]
    kept, report = maxprob_filter(records, threshold=0.9)
    assert [t.premise for t in kept] == ["p0", "p2"]
    assert [t.label for t in kept] == ["E", "N"]
    assert [t.source_id for t in kept] == ["pred:0", "pred:2"]
    assert report.threshold == 0.9
    assert report.input_count == 3
    assert report.kept == 2
    assert report.per_label == {"E": 1, "N": 1}


def test_maxprob_filter_boundary_inclusive():
    kept, _ = maxprob_filter([rec("p", "h", (0.9, 0.06, 0.04))], threshold=0.9)
    assert len(kept) == 1


def test_maxprob_filter_monotone_in_threshold():
    records = [
        rec(f"p{i}", f"h{i}", (v, (1 - v) / 2, (1 - v) / 2))
        for i, v in enumerate([0.4, 0.6, 0.8, 0.95, 0.99])
    ]
    sizes = []
    for thr in (0.0, 0.5, 0.7, 0.9, 1.0):
        kept, _ = maxprob_filter(records, threshold=thr)
        sizes.append(len(kept))
    assert sizes == sorted(sizes, reverse=True)


def test_filter_report_long_names():
    _, report = maxprob_filter([rec("p", "h", (0.91, 0.05, 0.04))])
    assert report.to_dict()["per_label"] == {"entailment": 1}


def test_augment_pseudo_wins_collisions():
    pseudo = [PHLTriplet("p", "h", "E", "pseudo", "pred:0", False)]
    gen = [
        PHLTriplet("p", "h", "C", "CW", "s1", False),
        PHLTriplet("p", "h2", "C", "CW", "s1", False),
    ]
    merged = augment_with_generated(pseudo, gen)
    assert len(merged) == 2
    assert merged[0].transform == "pseudo" and merged[0].label == "E"
    assert merged[1].hypothesis == "h2"


def test_read_predictions(tmp_path):
    path = tmp_path / "preds.jsonl"
    rows = [
        {"premise": "p0", "hypothesis": "h0", "probs": [0.9, 0.06, 0.04]},
        {"premise": "p1", "hypothesis": "h1", "probs": [0.2, 0.5, 0.3]},
    ]
    path.write_text("\n".join(json.dumps(r) for r in rows) + "\n")
    records = read_predictions(path)
    assert len(records) == 2
    assert records[0].probs == (0.9, 0.06, 0.04)


def test_read_predictions_bad_rows(tmp_path):
    path = tmp_path / "preds.jsonl"
    path.write_text("not json\n")
    with pytest.raises(ValueError):
        read_predictions(path)
    path.write_text(json.dumps({"premise": "p", "hypothesis": "h", "probs": [0.9, 0.3, 0.1]}) + "\n")
    with pytest.raises(InvalidProbabilityVector):
        read_predictions(path)
    path.write_text(json.dumps({"premise": "p", "probs": [0.9, 0.05, 0.05]}) + "\n")
    with pytest.raises(ValueError):
        read_predictions(path)
