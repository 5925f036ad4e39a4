from .util import load_yaml_config, make_combinations, measure_speed
