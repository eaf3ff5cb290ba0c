"""Cone complexes with face identifications and piecewise polynomials.

A complex is stored geometrically: all cones live in one integral
lattice, a cone is an ordered tuple of primitive ray vectors (always
simplicial here), and faces are subsets of rays.  Identifications are
generated by a finite list of gluings, each a linear isomorphism between
two faces given by matching up their rays; a gluing from a cone to
itself with a nontrivial ray permutation encodes monodromy.  Because
gluings are recorded as ray correspondences they survive subdivision
unchanged: star and barycentric subdivisions are canonical, so the same
correspondence keeps identifying the subdivided faces.

Piecewise polynomials are per-maximal-cone polynomials in that cone's
ray coordinates, agreeing on shared faces and invariant under all
gluings.  Spaces of them are computed by exact linear algebra.
"""

import itertools
import json
import math

from .errors import DomainError
from .exact_linalg import QMatrix
from .rationals import QQ, ZERO, ONE, rat

# ---------------------------------------------------------------------------
# vector helpers


def _primitive(vector):
    g = 0
    for x in vector:
        g = math.gcd(g, abs(x))
    if g == 0:
        raise DomainError("the zero vector spans no ray")
    return tuple(x // g for x in vector)


def _vector_sum(vectors):
    return tuple(sum(col) for col in zip(*vectors))


def _cone_coords(rays, vector):
    """Coordinates of vector in the span of the rays, or None."""
    if not rays:
        return None
    matrix = QMatrix([[QQ(r[i]) for r in rays] for i in range(len(rays[0]))])
    return matrix.solve([rat(x) for x in vector])


def _in_cone(rays, vector):
    coords = _cone_coords(rays, vector)
    return coords is not None and all(c >= 0 for c in coords)


# ---------------------------------------------------------------------------
# the complex


class ConeComplex:
    """Simplicial cones in a common lattice plus face identifications.

    cones: the maximal cones, each a tuple of primitive integer ray
    vectors (kept sorted, and the list of cones is kept sorted, so equal
    complexes compare equal).  gluings: pairs (source_rays, target_rays)
    of equal-length ray tuples; the isomorphism maps source ray i to
    target ray i and extends linearly.
    """

    __slots__ = ("lattice_rank", "cones", "gluings")

    def __init__(self, lattice_rank, cones, gluings=()):
        self.lattice_rank = lattice_rank
        fixed = sorted(tuple(sorted(tuple(r) for r in cone)) for cone in cones)
        self.cones = tuple(fixed)
        self.gluings = tuple(
            (tuple(tuple(r) for r in src), tuple(tuple(r) for r in dst))
            for src, dst in gluings
        )
        self.validate()

    def validate(self):
        if not self.cones:
            raise DomainError("a cone complex needs at least one cone")
        seen = set()
        for cone in self.cones:
            if not cone:
                raise DomainError("empty maximal cone")
            if cone in seen:
                raise DomainError("duplicate maximal cone")
            seen.add(cone)
            for ray in cone:
                if len(ray) != self.lattice_rank:
                    raise DomainError("ray does not match the lattice rank")
                if not all(isinstance(x, int) for x in ray):
                    raise DomainError("rays must be integer vectors")
                if _primitive(ray) != ray:
                    raise DomainError("ray %r is not primitive" % (ray,))
            matrix = QMatrix([[QQ(x) for x in ray] for ray in cone])
            if matrix.rank() != len(cone):
                raise DomainError("cone rays are linearly dependent")
        for src, dst in self.gluings:
            if len(src) != len(dst):
                raise DomainError("gluing joins faces of different dimension")
            # After a subdivision the glued face is a union of cones, so
            # only require the spanning rays to sit inside the support.
            for rays in (src, dst):
                matrix = QMatrix([[QQ(x) for x in ray] for ray in rays])
                if matrix.rank() != len(rays):
                    raise DomainError("gluing face rays are dependent")
                for ray in rays:
                    if not any(_in_cone(cone, ray) for cone in self.cones):
                        raise DomainError(
                            "gluing references %r outside the support" % (ray,)
                        )

    def _is_face(self, rays):
        rayset = set(rays)
        return any(rayset <= set(cone) for cone in self.cones)

    def rays(self):
        out = set()
        for cone in self.cones:
            out.update(cone)
        return tuple(sorted(out))

    def all_faces(self):
        """Every nonempty face of every cone, sorted by dimension."""
        faces = set()
        for cone in self.cones:
            for size in range(1, len(cone) + 1):
                for subset in itertools.combinations(cone, size):
                    faces.add(subset)
        return sorted(faces, key=lambda f: (len(f), f))

    def contains(self, point):
        return any(_in_cone(cone, point) for cone in self.cones)

    def find_cone(self, point):
        """Index of a maximal cone containing the point, or None."""
        for i, cone in enumerate(self.cones):
            if _in_cone(cone, point):
                return i
        return None

    def _ray_image_map(self, src, dst):
        """Image of every complex ray inside cone(src) under the gluing."""
        out = {}
        for ray in self.rays():
            coords = _cone_coords(src, ray)
            if coords is None or any(c < 0 for c in coords):
                continue
            image = [ZERO] * self.lattice_rank
            for c, target in zip(coords, dst):
                for i, x in enumerate(target):
                    image[i] += c * x
            if any(x.denominator != 1 for x in image):
                raise DomainError("gluing does not preserve the lattice")
            image = tuple(int(x) for x in image)
            if not any(image in cone for cone in self.cones):
                raise DomainError(
                    "gluing maps ray %r outside the complex" % (ray,)
                )
            out[ray] = image
        return out

    def __eq__(self, other):
        return (
            isinstance(other, ConeComplex)
            and self.lattice_rank == other.lattice_rank
            and self.cones == other.cones
            and self.gluings == other.gluings
        )

    def __hash__(self):
        return hash((self.lattice_rank, self.cones, self.gluings))

    def __repr__(self):
        return "ConeComplex(rank=%d, %d maximal cones, %d gluings)" % (
            self.lattice_rank,
            len(self.cones),
            len(self.gluings),
        )

    # -- serialization ------------------------------------------------------

    def to_json_dict(self):
        """All faces with facet links, maximal cones first by convention."""
        faces = self.all_faces()
        index = {face: i for i, face in enumerate(faces)}
        cones = []
        for face in faces:
            facets = []
            if len(face) > 1:
                facets = sorted(
                    index[sub] for sub in itertools.combinations(face, len(face) - 1)
                )
            cones.append({"rays": [list(r) for r in face], "faces": facets})
        return {
            "lattice_rank": self.lattice_rank,
            "cones": cones,
            "gluings": [
                {"source": [list(r) for r in src], "target": [list(r) for r in dst]}
                for src, dst in self.gluings
            ],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json_dict(data):
        rank = data["lattice_rank"]
        all_cones = [
            tuple(tuple(int(x) for x in ray) for ray in entry["rays"])
            for entry in data["cones"]
        ]
        raysets = [set(c) for c in all_cones]
        maximal = [
            cone
            for i, cone in enumerate(all_cones)
            if not any(i != j and raysets[i] < raysets[j] for j in range(len(all_cones)))
        ]
        gluings = [
            (
                tuple(tuple(int(x) for x in r) for r in entry["source"]),
                tuple(tuple(int(x) for x in r) for r in entry["target"]),
            )
            for entry in data.get("gluings", [])
        ]
        return ConeComplex(rank, maximal, gluings)

    @staticmethod
    def from_json(text):
        return ConeComplex.from_json_dict(json.loads(text))


def simplex_cone_complex(n):
    """The cone R^n_{>=0} spanned by the standard basis."""
    if n < 1:
        raise DomainError("need at least one dimension")
    basis = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    return ConeComplex(n, [tuple(basis)])


def triangle_z3_complex():
    """Cone over a triangle, all edges identified, with Z/3 monodromy.

    A single gluing generator, the rotation e1 -> e2 -> e3 -> e1,
    generates the whole identification groupoid.
    """
    e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    return ConeComplex(3, [(e1, e2, e3)], [((e1, e2, e3), (e2, e3, e1))])


# ---------------------------------------------------------------------------
# subdivisions


class SubdivisionMap:
    """Records which coarse cone each fine maximal cone lands in."""

    __slots__ = ("source", "target", "cone_targets")

    def __init__(self, source, target, cone_targets):
        self.source = source
        self.target = target
        self.cone_targets = tuple(cone_targets)

    def __repr__(self):
        return "SubdivisionMap(%d -> %d maximal cones)" % (
            len(self.source.cones),
            len(self.target.cones),
        )


def _subdivision_map(fine, coarse):
    targets = []
    for cone in fine.cones:
        for j, old in enumerate(coarse.cones):
            if all(_in_cone(old, ray) for ray in cone):
                targets.append(j)
                break
        else:
            raise DomainError("subdivision does not refine the complex")
    return SubdivisionMap(fine, coarse, targets)


def _gluing_orbit(complex, face):
    """All faces identified with the given one by the gluing groupoid."""
    orbit = {tuple(sorted(face))}
    queue = [tuple(sorted(face))]
    while queue:
        current = queue.pop()
        for src, dst in complex.gluings:
            for a, b in ((src, dst), (dst, src)):
                if not set(current) <= set(a):
                    continue
                position = {ray: i for i, ray in enumerate(a)}
                image = tuple(sorted(b[position[r]] for r in current))
                if image not in orbit:
                    orbit.add(image)
                    queue.append(image)
    return sorted(orbit)


def star_subdivision(complex, rays):
    """Star subdivision at the barycenter of the face spanned by the rays.

    The whole gluing orbit of the face is subdivided at once so the
    identifications stay valid.  If the orbit contains nested faces no
    uniform subdivision exists and the call is refused.
    """
    face = tuple(sorted(tuple(r) for r in rays))
    if not complex._is_face(face):
        raise DomainError("%r is not a face of the complex" % (face,))
    orbit = _gluing_orbit(complex, face)
    for a, b in itertools.combinations(orbit, 2):
        if set(a) < set(b) or set(b) < set(a):
            raise DomainError(
                "the face is identified with a nested face; star refused"
            )
    cones = list(complex.cones)
    for member in orbit:
        barycenter = _primitive(_vector_sum(member))
        subdivided = []
        for cone in cones:
            if set(member) <= set(cone):
                for f in member:
                    subdivided.append(
                        tuple(barycenter if r == f else r for r in cone)
                    )
            else:
                subdivided.append(cone)
        cones = subdivided
    fine = ConeComplex(complex.lattice_rank, set(cones), complex.gluings)
    return fine, _subdivision_map(fine, complex)


def barycentric(complex):
    """Subdivision by barycenters of all flags of faces.

    Each maximal cone with m rays is replaced by the m! cones spanned by
    the barycenters of a full flag of its faces.  The construction is
    canonical, so it descends through every identification.
    """
    cones = set()
    for cone in complex.cones:
        for perm in itertools.permutations(cone):
            partial = None
            flag = []
            for ray in perm:
                partial = ray if partial is None else _vector_sum([partial, ray])
                flag.append(_primitive(partial))
            cones.add(tuple(flag))
    fine = ConeComplex(complex.lattice_rank, cones, complex.gluings)
    return fine, _subdivision_map(fine, complex)


# ---------------------------------------------------------------------------
# polynomial dictionaries: {exponent tuple: coefficient}, homogeneous


def _poly_add(p, q):
    out = dict(p)
    for exps, c in q.items():
        c = out.get(exps, ZERO) + c
        if c:
            out[exps] = c
        else:
            out.pop(exps, None)
    return out


def _poly_scale(p, factor):
    factor = rat(factor)
    if not factor:
        return {}
    return {exps: c * factor for exps, c in p.items()}


def _poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            exps = tuple(a + b for a, b in zip(e1, e2))
            c = out.get(exps, ZERO) + c1 * c2
            if c:
                out[exps] = c
            else:
                out.pop(exps, None)
    return out


def _poly_eval(p, values):
    total = ZERO
    for exps, c in p.items():
        term = c
        for v, e in zip(values, exps):
            term *= v**e
        total += term
    return total


def _poly_substitute(p, forms, n_new):
    """Substitute a linear form (dict over new variables) per old variable."""
    out = {}
    for exps, c in p.items():
        term = {(0,) * n_new: c}
        for form, e in zip(forms, exps):
            for _ in range(e):
                term = _poly_mul(term, form)
        out = _poly_add(out, term)
    return out


def _cone_monomials(m, d):
    if d == 0:
        return ((0,) * m,)
    out = []
    for combo in itertools.combinations_with_replacement(range(m), d):
        exps = [0] * m
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return tuple(out)


# ---------------------------------------------------------------------------
# piecewise polynomials


class PPFunction:
    """A polynomial per maximal cone, in that cone's ray coordinates.

    Compatibility (agreement on shared faces, invariance under gluings)
    is a property checked by is_compatible / validate, not enforced on
    construction, so intermediate arithmetic results are representable.
    """

    __slots__ = ("complex", "degree", "polys")

    def __init__(self, complex, degree, polys):
        self.complex = complex
        self.degree = degree
        fixed = []
        for cone, poly in zip(complex.cones, polys):
            clean = {}
            for exps, c in poly.items():
                c = rat(c)
                if len(exps) != len(cone):
                    raise DomainError("exponent tuple does not match the cone")
                if sum(exps) != degree:
                    raise DomainError("polynomial is not homogeneous")
                if c:
                    clean[tuple(exps)] = c
            fixed.append(clean)
        if len(fixed) != len(complex.cones):
            raise DomainError("need one polynomial per maximal cone")
        self.polys = tuple(fixed)

    @classmethod
    def constant(cls, complex, value):
        value = rat(value)
        return cls(
            complex,
            0,
            [{(0,) * len(cone): value} for cone in complex.cones],
        )

    @classmethod
    def from_global(cls, complex, poly, degree):
        """Restrict a polynomial in the lattice coordinates to each cone.

        On a cone with rays r_1..r_m the lattice coordinate x_j restricts
        to sum_i r_i[j] * y_i.
        """
        out = []
        for cone in complex.cones:
            m = len(cone)
            forms = []
            for j in range(complex.lattice_rank):
                form = {}
                for i, ray in enumerate(cone):
                    if ray[j]:
                        exps = tuple(1 if t == i else 0 for t in range(m))
                        form[exps] = QQ(ray[j])
                forms.append(form)
            out.append(_poly_substitute(poly, forms, m))
        return cls(complex, degree, out)

    def __add__(self, other):
        self._check_other(other)
        return PPFunction(
            self.complex,
            self.degree,
            [_poly_add(p, q) for p, q in zip(self.polys, other.polys)],
        )

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return PPFunction(
            self.complex,
            self.degree,
            [_poly_scale(p, scalar) for p in self.polys],
        )

    def __mul__(self, other):
        if not isinstance(other, PPFunction):
            return NotImplemented
        if other.complex != self.complex:
            raise DomainError("functions live on different complexes")
        return PPFunction(
            self.complex,
            self.degree + other.degree,
            [_poly_mul(p, q) for p, q in zip(self.polys, other.polys)],
        )

    def _check_other(self, other):
        if not isinstance(other, PPFunction):
            raise DomainError("expected a piecewise polynomial")
        if other.complex != self.complex or other.degree != self.degree:
            raise DomainError("incompatible piecewise polynomials")

    def __eq__(self, other):
        return (
            isinstance(other, PPFunction)
            and self.complex == other.complex
            and self.degree == other.degree
            and self.polys == other.polys
        )

    def __hash__(self):
        return hash(
            (
                self.complex,
                self.degree,
                tuple(tuple(sorted(p.items())) for p in self.polys),
            )
        )

    def is_zero(self):
        return all(not p for p in self.polys)

    def evaluate(self, point):
        for cone, poly in zip(self.complex.cones, self.polys):
            coords = _cone_coords(cone, point)
            if coords is not None and all(c >= 0 for c in coords):
                return _poly_eval(poly, coords)
        raise DomainError("point %r lies outside the support" % (point,))

    def coefficient_vector(self):
        """All per-cone monomial coefficients in one flat vector."""
        out = []
        for cone, poly in zip(self.complex.cones, self.polys):
            for exps in _cone_monomials(len(cone), self.degree):
                out.append(poly.get(exps, ZERO))
        return out

    def is_compatible(self):
        try:
            self.validate()
        except DomainError:
            return False
        return True

    def validate(self):
        """Check agreement on shared faces and invariance under gluings."""
        cones = self.complex.cones
        for i, j in itertools.combinations(range(len(cones)), 2):
            shared = sorted(set(cones[i]) & set(cones[j]))
            if not shared:
                continue
            if self._restrict(i, shared) != self._restrict(j, shared):
                raise DomainError(
                    "polynomials disagree on a face shared by cones %d, %d"
                    % (i, j)
                )
        for src, dst in self.complex.gluings:
            ray_map = self.complex._ray_image_map(src, dst)
            for i, cone in enumerate(cones):
                face = sorted(r for r in cone if r in ray_map)
                if not face:
                    continue
                image = [ray_map[r] for r in face]
                for j, other in enumerate(cones):
                    if set(image) <= set(other):
                        break
                else:
                    raise DomainError("gluing image face missing")
                if self._restrict(i, face) != self._restrict(j, image):
                    raise DomainError("function is not gluing-invariant")

    def _restrict(self, cone_index, face_rays):
        """Coefficients supported on the given rays, keyed by their order."""
        cone = self.complex.cones[cone_index]
        positions = [cone.index(r) for r in face_rays]
        inside = set(positions)
        out = {}
        for exps, c in self.polys[cone_index].items():
            if all(e == 0 or k in inside for k, e in enumerate(exps)):
                out[tuple(exps[k] for k in positions)] = c
        return out

    def __repr__(self):
        return "PPFunction(degree=%d on %r)" % (self.degree, self.complex)


def _ray_multisets(complex, d):
    """Degree-d multisets of rays supported in a common cone, sorted."""
    out = set()
    for cone in complex.cones:
        for combo in itertools.combinations_with_replacement(sorted(cone), d):
            out.add(combo)
    return sorted(out)


def _connected_components(complex):
    n = len(complex.cones)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    for i, j in itertools.combinations(range(n), 2):
        if set(complex.cones[i]) & set(complex.cones[j]):
            union(i, j)
    for src, dst in complex.gluings:
        ray_map = complex._ray_image_map(src, dst)
        for i, cone in enumerate(complex.cones):
            image = [ray_map[r] for r in cone if r in ray_map]
            if not image:
                continue
            for j, other in enumerate(complex.cones):
                if set(image) <= set(other):
                    union(i, j)
                    break
    return [find(i) for i in range(n)]


def _multiset_to_function(complex, d, coefficients, multisets):
    index = {m: k for k, m in enumerate(multisets)}
    polys = []
    for cone in complex.cones:
        poly = {}
        for combo in itertools.combinations_with_replacement(sorted(cone), d):
            c = coefficients[index[combo]]
            if not c:
                continue
            exps = [0] * len(cone)
            for ray in combo:
                exps[cone.index(ray)] += 1
            poly[tuple(exps)] = c
        polys.append(poly)
    return PPFunction(complex, d, polys)


def pp_space(complex, d):
    """Basis of the degree-d piecewise polynomials, by exact nullspace.

    Face agreement makes the coefficient of a monomial depend only on
    the multiset of rays it involves, so those multisets are the
    unknowns; gluing invariance contributes the linear conditions.
    """
    if d < 0:
        raise DomainError("degree must be nonnegative")
    if d == 0:
        labels = _connected_components(complex)
        out = []
        for root in sorted(set(labels)):
            polys = [
                {(0,) * len(cone): ONE if labels[i] == root else ZERO}
                for i, cone in enumerate(complex.cones)
            ]
            out.append(PPFunction(complex, 0, polys))
        return out
    multisets = _ray_multisets(complex, d)
    index = {m: k for k, m in enumerate(multisets)}
    rows = []
    for src, dst in complex.gluings:
        ray_map = complex._ray_image_map(src, dst)
        for multiset in multisets:
            if not all(r in ray_map for r in multiset):
                continue
            image = tuple(sorted(ray_map[r] for r in multiset))
            if image not in index:
                raise DomainError("gluing image of a monomial is missing")
            if image == multiset:
                continue
            row = [ZERO] * len(multisets)
            row[index[multiset]] = ONE
            row[index[image]] = -ONE
            rows.append(row)
    if rows:
        kernel = QMatrix(rows, n_cols=len(multisets)).nullspace()
    else:
        kernel = [
            [ONE if i == k else ZERO for i in range(len(multisets))]
            for k in range(len(multisets))
        ]
    return [_multiset_to_function(complex, d, vec, multisets) for vec in kernel]


def pullback_pp(sub_map, f):
    """Restrict a piecewise polynomial along a subdivision map."""
    if f.complex != sub_map.target:
        raise DomainError("function does not live on the coarse complex")
    polys = []
    for cone, j in zip(sub_map.source.cones, sub_map.cone_targets):
        coarse = sub_map.target.cones[j]
        m = len(cone)
        # coarse coordinate k restricts to sum_i coords_i(ray_i)[k] * y_i
        forms = [{} for _ in coarse]
        for i, ray in enumerate(cone):
            coords = _cone_coords(coarse, ray)
            exps = tuple(1 if t == i else 0 for t in range(m))
            for k, c in enumerate(coords):
                if c:
                    forms[k][exps] = c
        polys.append(_poly_substitute(f.polys[j], forms, m))
    return PPFunction(sub_map.source, f.degree, polys)


def _multiset_vector(f):
    """Coefficients of f indexed by ray multisets (assumes compatibility)."""
    multisets = _ray_multisets(f.complex, f.degree)
    out = []
    for multiset in multisets:
        for i, cone in enumerate(f.complex.cones):
            if set(multiset) <= set(cone):
                exps = [0] * len(cone)
                for ray in multiset:
                    exps[cone.index(ray)] += 1
                out.append(f.polys[i].get(tuple(exps), ZERO))
                break
    return out


def generated_by_degree_one(complex, d):
    """Do products of degree-1 piecewise polynomials span degree d?"""
    if d < 2:
        raise DomainError("the question starts at degree 2")
    target = len(pp_space(complex, d))
    if target == 0:
        return True
    ones = pp_space(complex, 1)
    vectors = []
    for combo in itertools.combinations_with_replacement(ones, d):
        product = combo[0]
        for f in combo[1:]:
            product = product * f
        vectors.append(_multiset_vector(product))
    if not vectors:
        return False
    return QMatrix(vectors, n_cols=len(_ray_multisets(complex, d))).rank() == target


# ---------------------------------------------------------------------------
# the explosion identity


def _elementary_symmetric(functions, k):
    total = None
    for combo in itertools.combinations(functions, k):
        product = combo[0]
        for f in combo[1:]:
            product = product * f
        total = product if total is None else total + product
    return total


def explosion_chern_identity(s, k):
    """Check sigma_k of the exceptional-divisor ladder against sigma_k(x).

    On the barycentric subdivision of R^s_{>=0} the maximal cones are
    flags; ordering each cone's rays by support size, the ladder
    function l_j is the sum of the flag coordinates from step j+1 on.
    Restricted to a flag cone, l_j is the lattice coordinate added at
    step j+1, so the l_j realize the coordinates up to the flag's
    permutation.  The check is that each l_j glues to a genuine
    piecewise linear function and that the symmetric combination
    sigma_k(l_0, ..., l_{s-1}) is the global polynomial
    sigma_k(x_1, ..., x_s).
    """
    if not 1 <= k <= s <= 5:
        raise DomainError("supported range is 1 <= k <= s <= 5")
    fine, _ = barycentric(simplex_cone_complex(s))
    ladder = []
    orders = []
    for cone in fine.cones:
        orders.append(
            sorted(range(s), key=lambda i: sum(1 for x in cone[i] if x))
        )
    for j in range(s):
        polys = []
        for cone, order in zip(fine.cones, orders):
            poly = {}
            for position in order[j:]:
                exps = tuple(1 if t == position else 0 for t in range(s))
                poly[exps] = ONE
            polys.append(poly)
        f = PPFunction(fine, 1, polys)
        if not f.is_compatible():
            return False
        ladder.append(f)
    lhs = _elementary_symmetric(ladder, k)
    sigma = {}
    for combo in itertools.combinations(range(s), k):
        exps = tuple(1 if i in combo else 0 for i in range(s))
        sigma[exps] = ONE
    rhs = PPFunction.from_global(fine, sigma, k)
    return lhs == rhs
