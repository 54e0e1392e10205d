import configparser
import functools
from dataclasses import dataclass

HARD_MAX_N = 24


@dataclass(frozen=True)
class Settings:
    """Runtime limits and verification knobs read from config.ini."""
    max_n: int = 24
    convolution_max_n: int = 20
    general_coefficient_max_n: int = 16
    axiom_max_n: int = 12
    matrix_max_columns: int = 20
    matrix_max_rows: int = 12
    random_orders: int = 10
    random_seed: int = 20240601
    log_level: str = "WARNING"
    corpus_dir: str = "data/corpus"
    corpus_random_matrices: int = 50
    corpus_random_rank_tables: int = 50


def load_settings(config_path='config.ini'):
    """Reads config.ini; absent files, sections or keys fall back to the defaults."""
    config = configparser.ConfigParser()
    config.read(config_path)
    defaults = Settings()

    def _int(section, key, default):
        return config.getint(section, key, fallback=default)

    return Settings(
        max_n=min(_int('LIMITS', 'MAX_N', defaults.max_n), HARD_MAX_N),
        convolution_max_n=_int('LIMITS', 'CONVOLUTION_MAX_N', defaults.convolution_max_n),
        general_coefficient_max_n=_int('LIMITS', 'GENERAL_COEFFICIENT_MAX_N', defaults.general_coefficient_max_n),
        axiom_max_n=_int('LIMITS', 'AXIOM_MAX_N', defaults.axiom_max_n),
        matrix_max_columns=_int('LIMITS', 'MATRIX_MAX_COLUMNS', defaults.matrix_max_columns),
        matrix_max_rows=_int('LIMITS', 'MATRIX_MAX_ROWS', defaults.matrix_max_rows),
        random_orders=_int('VERIFY', 'RANDOM_ORDERS', defaults.random_orders),
        random_seed=_int('VERIFY', 'RANDOM_SEED', defaults.random_seed),
        log_level=config.get('LOGGING', 'LEVEL', fallback=defaults.log_level),
        corpus_dir=config.get('CORPUS', 'OUTPUT_DIR', fallback=defaults.corpus_dir),
        corpus_random_matrices=_int('CORPUS', 'RANDOM_MATRICES', defaults.corpus_random_matrices),
        corpus_random_rank_tables=_int('CORPUS', 'RANDOM_RANK_TABLES', defaults.corpus_random_rank_tables),
    )


@functools.lru_cache(maxsize=1)
def get_settings():
    return load_settings()
