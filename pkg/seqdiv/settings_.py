from mltk import Config, ConfigField

__all__ = ['Settings', 'settings']


class Settings(Config):

    float_tol: float = ConfigField(
        default=1e-9,
        envvar='SEQDIV_FLOAT_TOL',
        description='Absolute tolerance for floating-point comparisons, '
                    'e.g., the symmetry and zero-diagonal checks of distance '
                    'matrices, and the bounds of continuation probabilities.'
    )
    uniform_tol: float = ConfigField(
        default=1e-12,
        envvar='SEQDIV_UNIFORM_TOL',
        description='Continuation probabilities are regarded as uniform if '
                    'they differ by at most this value.'
    )
    max_brute_force_items: int = ConfigField(
        default=10,
        envvar='SEQDIV_MAX_BRUTE_FORCE_ITEMS',
        description='The maximum number of items accepted by the exhaustive '
                    'permutation oracle.'
    )
    brute_force_chunk_size: int = ConfigField(
        default=65536,
        envvar='SEQDIV_BRUTE_FORCE_CHUNK_SIZE',
        description='The number of permutations (or ordered tuples) to '
                    'evaluate in one vectorized batch.'
    )
    dpp_jitter: float = ConfigField(
        default=1e-6,
        envvar='SEQDIV_DPP_JITTER',
        description='Diagonal jitter added to the DPP similarity kernel when '
                    'a Cholesky pivot would be non-positive.'
    )
    warn_non_metric: bool = ConfigField(
        default=True,
        envvar='SEQDIV_WARN_NON_METRIC',
        description='Whether or not to emit a warning when an algorithm whose '
                    'guarantee relies on the triangle inequality receives a '
                    'non-metric distance matrix?'
    )


settings = Settings()
"""The global configuration for seqdiv."""
