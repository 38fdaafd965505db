"""
Комплекс f: 0 → V₀ → V₂ → V₃ → V₄ → V₀* → 0

Пространство V_k (k = 2, 3, 4) лежит в W_k - наборах чисел y_{a,i} по парам
(симплекс a, вершина i ∈ a) - и выделено условиями
Σ_i y_{a,i} = 0, Σ_i ζ_i y_{a,i} = 0. Выделенный базис V_k: первые
k - 1 координаты каждого симплекса свободны, две последние решаются.
Матрицы строятся подъемом базисного вектора в W_k, покомпонентным
отображением и проекцией на выделенный базис образа.
"""

import logging
from dataclasses import dataclass, field as dataclass_field

from triangulation import boundary_sign
from utils.errors import InputError

from .matrix import BasisLabel, ExactMatrix

logger = logging.getLogger("pachner_grassmann")

SPACE_SIZES = {"V2": 3, "V3": 4, "V4": 5}


def solve_tail(leading, zetas, inv_diff):
    """
    Решение двух последних координат из условий Σ y = 0, Σ ζ y = 0

    Работает для скаляров и элементов алгебры Грассмана.

    Args:
        leading: Значения первых координат (список, может быть пустым)
        zetas: Координаты ζ всех вершин симплекса
        inv_diff: Значение 1/(ζ_p - ζ_q) для двух последних вершин p, q

    Returns:
        tuple: (y_p, y_q)
    """
    zeta_q = zetas[-1]
    total = None
    weighted = None
    for value, zeta in zip(leading, zetas):
        total = value if total is None else total + value
        term = value * zeta
        weighted = term if weighted is None else weighted + term
    if total is None:
        return None, None
    y_p = (total * zeta_q - weighted) * inv_diff
    y_q = -total - y_p
    return y_p, y_q


@dataclass
class ChainVector:
    """
    Вектор пространства W_k (или V₀, V₀*) с координатами по парам (симплекс, вершина)
    """
    space: str
    coords: dict = dataclass_field(default_factory=dict)

    def get(self, simplex, vertex):
        return self.coords.get((tuple(simplex), vertex))

    def add(self, simplex, vertex, value):
        key = (tuple(simplex), vertex)
        if key in self.coords:
            self.coords[key] = self.coords[key] + value
        else:
            self.coords[key] = value

    def simplices(self):
        return sorted({simplex for simplex, _ in self.coords})

    def satisfies_constraints(self, zeta):
        """
        Проверка условий Σ_i y_{a,i} = 0 и Σ_i ζ_i y_{a,i} = 0 для каждого симплекса
        """
        for simplex in self.simplices():
            total = zeta.field.zero
            weighted = zeta.field.zero
            for vertex in simplex:
                value = self.coords.get((simplex, vertex))
                if value is None:
                    continue
                total = total + value
                weighted = weighted + value * zeta[vertex]
            if total or weighted:
                return False
        return True

    def project(self, space):
        """
        Проекция на выделенный базис: словарь BasisLabel -> значение

        Для V₄ с образом в W₄ (space="W4") сохраняются все пять координат.
        """
        result = {}
        for (simplex, vertex), value in self.coords.items():
            if not value:
                continue
            if space in SPACE_SIZES:
                free = SPACE_SIZES[space] - 2
                if simplex.index(vertex) >= free:
                    continue
            result[BasisLabel(space, simplex, vertex)] = value
        return result


def lift_to_constrained(space, free_coords, zeta):
    """
    Подъем вектора из выделенного базиса V_k в W_k

    Args:
        space: "V2", "V3" или "V4"
        free_coords: Словарь (симплекс, вершина) -> значение на свободных координатах
        zeta: Координаты вершин

    Returns:
        ChainVector: Вектор W_k, удовлетворяющий обоим условиям

    Raises:
        InputError: Если координата не является свободной
    """
    if space not in SPACE_SIZES:
        raise InputError(f"Неизвестное пространство {space}")
    free = SPACE_SIZES[space] - 2
    grouped = {}
    for (simplex, vertex), value in free_coords.items():
        simplex = tuple(simplex)
        if len(simplex) != SPACE_SIZES[space] or simplex.index(vertex) >= free:
            raise InputError(f"Координата ({simplex}, {vertex}) не свободна в {space}")
        grouped.setdefault(simplex, {})[vertex] = zeta.field(value)

    vector = ChainVector(space.replace("V", "W"))
    for simplex, values in sorted(grouped.items()):
        leading = [values.get(v, zeta.field.zero) for v in simplex[:free]]
        zetas = [zeta[v] for v in simplex]
        inv = zeta.diff(simplex[-2], simplex[-1]).inverse()
        y_p, y_q = solve_tail(leading, zetas, inv)
        for vertex, value in zip(simplex, leading + [y_p, y_q]):
            vector.coords[(simplex, vertex)] = value
    return vector


def _basis(space, simplices):
    free = SPACE_SIZES[space] - 2
    return [BasisLabel(space, s, v) for s in simplices for v in s[:free]]


def _lift_label(label, zeta):
    return lift_to_constrained(label.space, {(label.simplex, label.vertex): 1}, zeta)


def _even_order(i, triangle):
    """
    Остальные вершины j, k треугольника, для которых перестановка (i, j, k) четна
    """
    rest = [v for v in triangle if v != i]
    j, k = rest
    # Для упорядоченного треугольника a < b < c четны (a,b,c), (b,c,a), (c,a,b)
    if triangle.index(i) == 1:
        return k, j
    return j, k


def build_f2(triangulation, lattice, zeta):
    """
    Матрица f₂: V₀ → V₂

    y_{s,i} = (ζ_ij⁻¹ - ζ_ik⁻¹) y_i - ζ_ij⁻¹ y_j + ζ_ik⁻¹ y_k, перестановка (i, j, k) четна

    Args:
        triangulation: Триангуляция
        lattice: Решетка граней
        zeta: Координаты вершин

    Returns:
        ExactMatrix: Матрица (внутренние треугольники) × (внутренние вершины)
    """
    field = zeta.field
    cols = [BasisLabel("V0", (v,)) for v in lattice.inner_vertices]
    rows = _basis("V2", lattice.inner_triangles)
    columns = []
    for col in cols:
        source = col.simplex[0]
        image = ChainVector("W2")
        for s in lattice.inner_triangles:
            if source not in s:
                continue
            for i in s:
                j, k = _even_order(i, s)
                inv_ij = zeta.diff(i, j).inverse()
                inv_ik = zeta.diff(i, k).inverse()
                if source == i:
                    image.add(s, i, inv_ij - inv_ik)
                elif source == j:
                    image.add(s, i, -inv_ij)
                else:
                    image.add(s, i, inv_ik)
        columns.append(image.project("V2"))
    return ExactMatrix.from_columns(field, rows, cols, columns)


def build_f3(triangulation, lattice, zeta):
    """
    Матрица f₃: V₂ → V₃, y_{t,i} = Σ_{s⊂t, s∋i} ε_s^(t) y_{s,i}

    Returns:
        ExactMatrix: Матрица (все тетраэдры) × (внутренние треугольники)
    """
    cols = _basis("V2", lattice.inner_triangles)
    rows = _basis("V3", lattice.tetrahedra)
    columns = []
    for col in cols:
        lifted = _lift_label(col, zeta)
        image = ChainVector("W3")
        s = col.simplex
        for t in lattice.tetrahedra_containing(s):
            sign = boundary_sign(s, t)
            for vertex in s:
                image.add(t, vertex, lifted.get(s, vertex) * sign)
        columns.append(image.project("V3"))
    return ExactMatrix.from_columns(zeta.field, rows, cols, columns)


def build_f4(triangulation, lattice, zeta, codomain="V4"):
    """
    Матрица f₄: V₃ → V₄, y_{u,i} = Σ_{t⊂u, t∋i} ε_t^(u) y_{t,i}

    Args:
        triangulation: Триангуляция
        lattice: Решетка граней
        zeta: Координаты вершин
        codomain: "V4" (выделенный базис) или "W4" (все пять координат
            каждого 4-симплекса)

    Returns:
        ExactMatrix: Матрица (4-симплексы) × (все тетраэдры)
    """
    if codomain not in ("V4", "W4"):
        raise InputError(f"Образ f₄ должен быть V4 или W4, получено {codomain}")
    cols = _basis("V3", lattice.tetrahedra)
    if codomain == "V4":
        rows = _basis("V4", triangulation.simplices4)
    else:
        rows = [BasisLabel("W4", u, v) for u in triangulation.simplices4 for v in u]
    columns = []
    for col in cols:
        lifted = _lift_label(col, zeta)
        image = ChainVector("W4")
        t = col.simplex
        for u in lattice.cofaces[t]:
            sign = boundary_sign(t, u)
            for vertex in t:
                image.add(u, vertex, lifted.get(t, vertex) * sign)
        columns.append(image.project(codomain))
    return ExactMatrix.from_columns(zeta.field, rows, cols, columns)


def build_f5(triangulation, lattice, zeta):
    """
    Матрица f₅: V₄ → V₀*, y*_i = Σ_{u∋i} ε_u y_{u,i} по внутренним вершинам

    Returns:
        ExactMatrix: Матрица (внутренние вершины) × (4-симплексы)
    """
    cols = _basis("V4", triangulation.simplices4)
    rows = [BasisLabel("V0*", (v,)) for v in lattice.inner_vertices]
    inner = set(lattice.inner_vertices)
    columns = []
    for col in cols:
        lifted = _lift_label(col, zeta)
        u = col.simplex
        eps = triangulation.eps(u)
        image = {}
        for vertex in u:
            if vertex in inner:
                image[BasisLabel("V0*", (vertex,))] = lifted.get(u, vertex) * eps
        columns.append(image)
    return ExactMatrix.from_columns(zeta.field, rows, cols, columns)


def _tet_scale(label, zeta):
    t = label.simplex
    return zeta.diff(t[2], t[3])


def gauge_f4(f4, zeta):
    """
    f̃₄: оба столбца тетраэдра ijkℓ умножаются на ζ_kℓ
    """
    return f4.scale_cols(lambda label: _tet_scale(label, zeta))


def gauge_transform(f3, f4, zeta):
    """
    Калибровочное преобразование f₃, f₄

    f̃₄: оба столбца тетраэдра ijkℓ умножаются на ζ_kℓ;
    f̃₃: строки тетраэдра ijkℓ делятся на ζ_kℓ, столбец треугольника ijk
    умножается на ζ_jk.

    Args:
        f3: Матрица f₃
        f4: Матрица f₄ (образ V4 или W4)
        zeta: Координаты вершин

    Returns:
        tuple: (f̃₃, f̃₄)
    """
    f4_tilde = gauge_f4(f4, zeta)
    f3_tilde = f3.scale_rows(lambda label: _tet_scale(label, zeta).inverse())
    f3_tilde = f3_tilde.scale_cols(lambda label: zeta.diff(label.simplex[1], label.simplex[2]))
    return f3_tilde, f4_tilde


@dataclass
class FComplex:
    """
    Набор матриц комплекса f для одной триангуляции
    """
    f2: ExactMatrix
    f3: ExactMatrix
    f4: ExactMatrix
    f5: ExactMatrix
    f3_tilde: ExactMatrix
    f4_tilde: ExactMatrix

    @property
    def has_inner_vertices(self):
        return bool(self.f2.cols)

    def maps(self):
        """
        Отображения комплекса по порядку; без внутренних вершин - короткий
        комплекс 0 → V₂ → V₃ → V₄ → 0 в калиброванном виде
        """
        if self.has_inner_vertices:
            return [("f2", self.f2), ("f3", self.f3), ("f4", self.f4), ("f5", self.f5)]
        return [("f3_tilde", self.f3_tilde), ("f4_tilde", self.f4_tilde)]


def build_f_complex(triangulation, lattice, zeta):
    """
    Все матрицы комплекса f, включая калиброванные f̃₃, f̃₄

    Returns:
        FComplex: Матрицы комплекса
    """
    zeta.covers(triangulation.vertex_ids)
    f3 = build_f3(triangulation, lattice, zeta)
    f4 = build_f4(triangulation, lattice, zeta)
    f3_tilde, f4_tilde = gauge_transform(f3, f4, zeta)
    logger.debug(f"Комплекс f построен: f3 {f3.shape}, f4 {f4.shape}")
    return FComplex(
        f2=build_f2(triangulation, lattice, zeta),
        f3=f3,
        f4=f4,
        f5=build_f5(triangulation, lattice, zeta),
        f3_tilde=f3_tilde,
        f4_tilde=f4_tilde,
    )

