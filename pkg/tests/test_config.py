import json

import pytest

from tropcyl import config as cfg
from tropcyl.classes import intersect
from tropcyl.counting import contributing_classes, default_table
from tropcyl.errors import ConfigError

CUBIC = {
    "model": {"fan": {"rays": [[1, 0], [0, 1], [-1, -1]]}, "blowups": [2, 2, 2]},
    "walls": {"steps": 2, "norm_bound": 5, "rule": "support"},
}


def test_parse_config_basics():
    config = cfg.parse_config(CUBIC)
    assert config.model.blowups == (2, 2, 2)
    assert config.walls.steps == 2
    assert config.walls.rule == "support"


def test_parse_config_defaults():
    config = cfg.parse_config({"model": CUBIC["model"]})
    assert config.walls.rule == "pair_sum"
    assert config.render.width > 0


def test_bad_ray_is_path_addressed():
    data = {"model": {"fan": {"rays": [[1, 0], [0, 1], [-1, "x"]]}, "blowups": [0, 0, 0]}}
    with pytest.raises(ConfigError) as exc:
        cfg.parse_config(data)
    assert "model.fan.rays[2][1]" in str(exc.value)


def test_bad_rule_rejected():
    data = dict(CUBIC, walls={"rule": "magic"})
    with pytest.raises(ConfigError) as exc:
        cfg.parse_config(data)
    assert "walls.rule" in str(exc.value)


def test_non_smooth_fan_reported_at_model():
    data = {"model": {"fan": {"rays": [[1, 0], [-1, 1], [-1, -1]]}, "blowups": [0, 0, 0]}}
    with pytest.raises(ConfigError) as exc:
        cfg.parse_config(data)
    assert "model" in str(exc.value)


def test_config_round_trip():
    config = cfg.parse_config(CUBIC)
    again = cfg.parse_config(cfg.config_to_dict(config))
    assert again.model == config.model
    assert again.walls == config.walls


def test_profile_round_trip():
    model = cfg.parse_config(CUBIC).model
    beta = cfg.parse_profile({"dD": [1, 1, 0], "dE": [[3, 1, 1]]}, model)
    assert cfg.profile_to_dict(model, beta) == {"dD": [1, 1, 0], "dE": [[3, 1, 1]]}


def test_profile_length_check():
    model = cfg.parse_config(CUBIC).model
    with pytest.raises(ConfigError) as exc:
        cfg.parse_profile({"dD": [1, 1]}, model)
    assert "dD" in str(exc.value)


def test_cylinder_spec_canonical_build():
    model = cfg.parse_config(CUBIC).model
    cyl, beta = cfg.parse_cylinder_spec({"twig_type": [[-1, -1]]}, model)
    assert cyl.twig_type == ((-1, -1),)
    assert beta is None


def test_cylinder_spec_with_spine_and_class():
    model = cfg.parse_config(CUBIC).model
    data = {
        "twig_type": [[-1, -1]],
        "spine": {"p1": [1, 0], "p2": [0, 1], "bend_at": ["1/2", "1/2"]},
        "class": {"dD": [1, 1, 0], "dE": [[3, 1, 1]]},
    }
    cyl, beta = cfg.parse_cylinder_spec(data, model)
    assert cyl.p1 == (1, 0)
    assert intersect(model, beta).dE_map == {(3, 1): 1}


def test_table_round_trip(tmp_path):
    model = cfg.parse_config(CUBIC).model
    table = default_table(model)
    payload = {
        "entries": [
            {
                "pair": list(pair),
                "counts": [
                    {"class": cfg.profile_to_dict(model, c), "count": n}
                    for c, n in counts
                ],
            }
            for pair, counts in table.entries
        ]
    }
    path = tmp_path / "table.json"
    path.write_text(json.dumps(payload))
    loaded = cfg.parse_table(cfg.load_json(str(path)), model)
    assert loaded == table


def test_load_json_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        cfg.load_json(str(tmp_path / "absent.json"))


def test_load_json_invalid(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(ConfigError):
        cfg.load_json(str(bad))


def test_loaded_table_matches_counts(tmp_path):
    model = cfg.parse_config(CUBIC).model
    from tropcyl.counting import build_cylinder

    cyl = build_cylinder(model, ((1, 0),), extended=True)
    entries = contributing_classes(model, cyl)
    assert len(entries) == 2
