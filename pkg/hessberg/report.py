"""
Rendering of command output.

Text output goes through the jinja2 templates below; JSON output is built
from the ``*_payload`` dicts, with roots as coefficient vectors and Weyl
elements as words (``s1 s2``, ``e``).
"""

import json
import logging

from jinja2 import DictLoader, Environment, StrictUndefined

from hessberg.rootsys import format_root

logger = logging.getLogger(__name__)


def vector(root):
    return "[" + ",".join(str(c) for c in root.coeffs) + "]"


def compact(value):
    """JSON without spaces, as used inside CSV cells."""
    return json.dumps(value, separators=(",", ":"))


TEMPLATES = {
    'describe': """\
type: {{ cartan }}
rank: {{ rank }}
positive roots: {{ n_positive }}
Weyl group order: {{ order }}
highest root: {{ highest | root }} {{ highest | vector }}
Cartan matrix:
{% for row in matrix %}
  {% for x in row %}{{ '%3d' % x }}{% endfor %}

{% endfor %}
positive roots:
{% for root in roots %}
  {{ '%2d' % root.height }}  {{ root | vector }}  {{ root | root }}
{% endfor %}
""",
    'spaces': """\
{{ spaces | length }} Hessenberg spaces for {{ cartan }}
{% for space in spaces %}
{{ '%3d' % loop.index }}  |Phi_H^-|={{ space.size }}  {{ space }}{{ '  h=' ~ h[loop.index0] | join(',') if h else '' }}
{% endfor %}
""",
    'betti': """\
{{ cartan }}  levi=[{{ levi }}]  {{ hess }}
{% for c in cells %}
  w={{ c.w }}  y={{ c.y }}  v={{ c.v }}  dim={{ c.dim }}
{% endfor %}
betti: {{ betti | join(' ') }}
poincare: {{ poincare }}
""",
    'connected': """\
{{ 'connected' if connected else 'disconnected' }} (criterion: {{ 'yes' if criterion else 'no' }}, betti n0={{ n0 }})
{% if witness %}
{% include 'witness' %}
{% endif %}
""",
    'witness': """\
witness: alpha={{ witness.alpha | root }} v={{ witness.v }} ({{ witness.case }})
{% if witness.w %}
  Phi_w = Phi>={{ witness.alpha | root }} for w={{ witness.w }}; w^-1 = y v with y={{ witness.y }}
{% endif %}
""",
    'fixed_points': """\
{{ points | length }} fixed points for N={{ nilpotent }}, {{ hess }}
{% for w in points %}
  {{ w }}
{% endfor %}
""",
    'chain': """\
{{ chain.start }}
{% for step in chain.steps %}
  --[{{ step.gamma | root }}]--> {{ step.w_after }}
{% endfor %}
""",
    'catalog': """\
{% for row in rows %}
{{ row.cartan }}  levi=[{{ row.levi | join(',') }}]  {{ row.hess_text }}  betti={{ row.betti | join(' ') }}  {{ 'connected' if row.conn_betti else 'disconnected' }}{{ '  witness=' ~ row.witness if row.witness else '' }}{{ '' if row.agree else '  DISAGREE' }}
{% endfor %}
{{ rows | length }} rows, {{ rows | rejectattr('agree') | list | length }} disagreements
""",
    'validation': """\
{% for name, stats in checks.items() %}
{{ '%-24s' % name }} {{ '%6d' % stats.cases }} cases  {{ 'ok' if not stats.failures else stats.failures | length ~ ' FAILED' }}
{% for failure in stats.failures[:5] %}
    {{ failure }}
{% endfor %}
{% endfor %}
{{ 'all checks passed' if passed else 'FAILED' }}
""",
}

_env = Environment(
    loader=DictLoader(TEMPLATES),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    undefined=StrictUndefined,
)
_env.filters['vector'] = vector
_env.filters['root'] = format_root


def render(name, **context) -> str:
    return _env.get_template(name).render(**context)


def to_json(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def describe_payload(rs, W_order):
    return {
        'cartan': rs.cartan.name,
        'rank': rs.rank,
        'n_positive': rs.n_positive,
        'weyl_order': W_order,
        'highest_root': list(rs.highest_root.coeffs),
        'cartan_matrix': [list(row) for row in rs.cartan.matrix],
        'positive_roots': [list(r.coeffs) for r in rs.positive_roots],
    }


def spaces_payload(rs, spaces, h=None):
    rows = []
    for k, H in enumerate(spaces):
        row = {'size': H.size, 'neg': H.vectors()}
        if h:
            row['h'] = h[k]
        rows.append(row)
    return {'cartan': rs.cartan.name, 'count': len(spaces), 'spaces': rows}


def witness_payload(witness):
    if witness is None:
        return None
    return {'alpha': list(witness.alpha.coeffs), 'v': str(witness.v)}


def betti_payload(M, H, table, connected, witness=None):
    return {
        'cartan': M.rs.cartan.name,
        'levi': M.labels,
        'hess_neg': H.vectors(),
        'cells': [{'w': str(c.w), 'y': str(c.y), 'v': str(c.v), 'dim': c.dim} for c in table.cells],
        'betti': list(table.counts),
        'poincare': table.poincare,
        'connected': connected,
        'witness': witness_payload(witness),
    }


def fixed_points_payload(N, H, points):
    return {
        'cartan': N.rs.cartan.name,
        'nilpotent': N.vectors(),
        'hess_neg': H.vectors(),
        'fixed_points': [str(w) for w in points],
    }


def chain_payload(chain):
    return {
        'start': str(chain.start),
        'steps': [
            {'w_before': str(s.w_before), 'gamma': list(s.gamma.coeffs), 'w_after': str(s.w_after)}
            for s in chain.steps
        ],
        'end': str(chain.end),
    }
