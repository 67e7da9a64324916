from dataclasses import dataclass


@dataclass(frozen=True)
class Defect:
    """One violated axiom or property instance.

    Args:
        kind: string, identifier of the violated axiom or property (e.g. 'PI2').
        witnesses: tuple of witnessing values, relations rendered canonically.
        detail: string, human readable explanation.
    """

    kind: str
    witnesses: tuple = ()
    detail: str = ''

    def render(self):
        parts = [self.kind]
        if self.witnesses:
            parts.append(' '.join(_render_witness(w) for w in self.witnesses))
        if self.detail:
            parts.append(self.detail)
        return ': '.join(parts)

    def to_dict(self):
        return {
            'kind': self.kind,
            'witnesses': [_render_witness(w) for w in self.witnesses],
            'detail': self.detail,
        }


def _render_witness(w):
    if hasattr(w, 'render'):
        return w.render()
    return str(w)


def sorted_report(defects):
    """ Deterministic ordering of a defect list; duplicates are dropped. """
    unique = {(d.kind, tuple(_render_witness(w) for w in d.witnesses), d.detail): d for d in defects}
    return [unique[k] for k in sorted(unique)]
