"""
Default settings for hessberg runs.

Callers pass overrides the same way they are passed to the engine: a plain
dict merged over the defaults.
"""

DEFAULT_SETTINGS = {
    # Weyl enumeration is refused above this order unless forced (keeps E7/E8 out)
    'WEYL_ORDER_LIMIT': 60000,
    # Hessenberg-space enumeration and catalogs
    'ENUMERATION_RANK_LIMIT': 4,
    'JOBS': 1,
    'FORMAT': 'text',
    # Types covered by validate-all
    'SEMISIMPLE_TYPES': ['A1', 'A2', 'A3', 'B2', 'B3', 'C3', 'G2'],
    'NILPOTENT_TYPES': ['A1', 'A2', 'B2', 'G2'],
    'MAX_RANK': 3,
}


def build_settings(additional_settings=None):
    """Return a fresh settings dict with ``additional_settings`` applied."""
    settings = dict(DEFAULT_SETTINGS)
    if additional_settings:
        unknown = set(additional_settings) - set(DEFAULT_SETTINGS)
        if unknown:
            raise KeyError(f"Unknown settings: {', '.join(sorted(unknown))}")
        settings.update(additional_settings)
    return settings
