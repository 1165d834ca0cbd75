# -*- coding: utf-8 -*-
import json

from ..exceptions import ShapeError
from ..linalg import Matrix, matmul_diag

KINDS = ('matmul', 'hadamard_power', 'poly', 'khatri_power', 'khatri_poly',
         'tensor_directsum', 'tensor_inner')


def _label_str(label):
    if isinstance(label, tuple) and len(label) == 2 and isinstance(label[1], tuple):
        return '{}:{}'.format(label[0], ','.join(str(p) for p in label[1]))
    if isinstance(label, tuple):
        return ','.join(str(p) for p in label)
    return str(label)


class Decomposition:
    """An exact factorization ``left @ diag(D) @ right.T``.

    Arguments:
        left(Matrix): ``rows x N`` exact matrix.
        diag(DiagonalMatrix): ``N`` diagonal entries.
        right(Matrix): ``cols x N`` exact matrix.
        column_labels(list): One label per inner index: a
            ``WeakComposition``, a ``(coordinate, WeakComposition)`` pair or
            a tensor-coordinate tuple.
        kind(str): Name of the builder that produced it.
    """

    def __init__(self, left, diag, right, column_labels, kind):
        if not (left.cols == diag.N == right.cols):
            raise ShapeError('Decomposition inner dimensions {}, {}, {}'.format(
                left.cols, diag.N, right.cols))
        if len(column_labels) != diag.N:
            raise ShapeError('Decomposition has {} labels for N={}'.format(
                len(column_labels), diag.N))
        if kind not in KINDS:
            raise ValueError('Unknown decomposition kind {!r}'.format(kind))
        self.left = left
        self.diag = diag
        self.right = right
        self.column_labels = list(column_labels)
        self.kind = kind

    @property
    def inner_dim(self):
        return self.diag.N

    @property
    def shape(self):
        """Shape of the reconstructed matrix."""
        return (self.left.rows, self.right.rows)

    def reconstruct(self):
        return matmul_diag(self.left, self.diag, self.right)

    def embedding_pair(self):
        """Returns ``(L, R)`` with ``L.T @ R`` equal to the reconstruction.
        Only meaningful for unit diagonals (tensor builders)."""
        return self.left.T, self.right.T

    def repeated_column_pairs(self):
        """Index pairs ``(a, b)``, ``a < b``, of identical ``right`` columns."""
        groups = {}
        for idx in range(self.right.cols):
            groups.setdefault(tuple(self.right.column(idx)), []).append(idx)
        pairs = []
        for members in groups.values():
            for pos, a in enumerate(members):
                for b in members[pos + 1:]:
                    pairs.append((a, b))
        return sorted(pairs)

    def to_dict(self):
        return {
            'kind': self.kind,
            'shape': list(self.shape),
            'inner_dim': self.inner_dim,
            'left_shape': list(self.left.shape),
            'right_shape': list(self.right.shape),
            'labels': [_label_str(lbl) for lbl in self.column_labels],
            'diag': [str(x) for x in self.diag.diag],
            'left': [[str(x) for x in row] for row in self.left.data],
            'right': [[str(x) for x in row] for row in self.right.data],
        }

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def __repr__(self):
        return 'Decomposition(kind={}, shape={}x{}, inner_dim={})'.format(
            self.kind, self.shape[0], self.shape[1], self.inner_dim)


def verify_reconstruction(decomposition, target):
    """True iff ``decomposition`` reproduces ``target`` exactly."""
    if not isinstance(target, Matrix):
        target = Matrix(target)
    if decomposition.shape != target.shape:
        raise ShapeError('verify_reconstruction: {} vs target {}'.format(
            decomposition.shape, target.shape))
    return decomposition.reconstruct() == target.to_exact()
