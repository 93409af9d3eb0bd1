"""ABS matrices, spectra, energies, closed-form spectra and transform predictions.

The ABS matrix of a graph carries ``sqrt((d_i + d_j - 2) / (d_i + d_j))`` on
every edge and 0 elsewhere; its entries lie in [0, 1) and its trace is 0. The
ABS energy is the sum of absolute ABS eigenvalues, the graph energy the same
for the adjacency matrix.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .graphs import adjacency_matrix, degree_sequence, is_connected, is_regular, line_graph
from .indices import degree_index
from .transforms import shadow, splitting

CLOSED_FORM_KINDS = ("regular_scaled", "complete", "cycle", "star", "complete_bipartite")
LIFT_KINDS = ("subdivision", "semitotal_point", "semitotal_line")
ENERGY_PREDICTION_KINDS = ("splitting", "shadow")


@dataclass(frozen=True)
class EnergyReport:
    """Spectrum (sorted ascending) together with the sum of absolute eigenvalues."""

    spectrum: np.ndarray
    energy: float


@dataclass(frozen=True)
class PredictedEnergy:
    """Both readings of an energy formula for a transformed regular graph.

    ``corrected`` follows the block/Kronecker structure of the transform's
    ABS matrix and multiplies the base graph's adjacency energy;
    ``as_printed`` keeps the original scalar factor and multiplies the
    transformed graph's adjacency energy.
    """

    corrected: float
    as_printed: float


def abs_matrix(graph):
    """Dense ABS matrix of a graph."""
    degs = degree_sequence(graph)
    a = np.zeros((graph.n, graph.n))
    for u, v in graph.edges:
        s = degs[u] + degs[v]
        w = math.sqrt((s - 2.0) / s)
        a[u, v] = w
        a[v, u] = w
    return a


def adjacency_spectrum(graph):
    """Adjacency eigenvalues, sorted ascending."""
    return linalg.eigenvalues_symmetric(adjacency_matrix(graph))


def abs_spectrum(graph):
    """ABS eigenvalues, sorted ascending."""
    return linalg.eigenvalues_symmetric(abs_matrix(graph))


def _energy(spectrum):
    return math.fsum(abs(x) for x in spectrum.tolist())


def abs_energy(graph):
    """ABS spectrum and energy."""
    spec = abs_spectrum(graph)
    return EnergyReport(spectrum=spec, energy=_energy(spec))


def adjacency_energy(graph):
    """Adjacency spectrum and graph energy."""
    spec = adjacency_spectrum(graph)
    return EnergyReport(spectrum=spec, energy=_energy(spec))


def regular_abs_factor(r):
    """Scale factor sqrt(r^2 - r) / r turning adjacency into ABS data for r-regular graphs."""
    if r < 1:
        raise ValueError(f"regular scaling needs degree r >= 1, got {r}")
    return math.sqrt(r * r - r) / r


def closed_form_abs_spectrum(kind, *params):
    """Closed-form ABS spectrum of a named family, sorted ascending.

    Kinds and parameters:

    * ``regular_scaled`` (adjacency_spectrum, r): entrywise scaling by
      ``sqrt(r^2 - r)/r``, r >= 1;
    * ``complete`` (n >= 2): one eigenvalue ``(n-1)*sqrt((n-2)/(n-1))`` and
      ``-sqrt((n-2)/(n-1))`` with multiplicity n-1;
    * ``cycle`` (n >= 3): ``sqrt(2)*cos(2*pi*i/n)`` for i = 0..n-1;
    * ``star`` (n >= 2): ``+/- sqrt((n-1)(n-2)/n)`` and n-2 zeros;
    * ``complete_bipartite`` (m, n >= 1): ``+/- sqrt(mn(m+n-2)/(m+n))`` and
      m+n-2 zeros.
    """
    if kind == "regular_scaled":
        spectrum, r = params
        return np.sort(regular_abs_factor(int(r)) * np.asarray(spectrum, dtype=float))
    if kind == "complete":
        (n,) = params
        if n < 2:
            raise ValueError(f"complete closed form needs n >= 2, got {n}")
        w = math.sqrt((n - 2.0) / (n - 1.0))
        return np.sort(np.array([(n - 1) * w] + [-w] * (n - 1)))
    if kind == "cycle":
        (n,) = params
        if n < 3:
            raise ValueError(f"cycle closed form needs n >= 3, got {n}")
        return np.sort(np.array([math.sqrt(2.0) * math.cos(2.0 * math.pi * i / n) for i in range(n)]))
    if kind == "star":
        (n,) = params
        if n < 2:
            raise ValueError(f"star closed form needs n >= 2, got {n}")
        w = math.sqrt((n - 1.0) * (n - 2.0) / n)
        return np.sort(np.array([w, -w] + [0.0] * (n - 2)))
    if kind == "complete_bipartite":
        a, b = params
        if a < 1 or b < 1:
            raise ValueError(f"complete_bipartite closed form needs part sizes >= 1, got ({a}, {b})")
        w = math.sqrt(a * b * (a + b - 2.0) / (a + b))
        return np.sort(np.array([w, -w] + [0.0] * (a + b - 2)))
    raise ValueError(f"unknown closed-form kind {kind!r}; expected one of {CLOSED_FORM_KINDS}")


def path_abs_charpoly(n):
    """ABS characteristic polynomial of the n-vertex path via the tridiagonal recurrence.

    Valid for n >= 5. With Omega_0 = 1, Omega_1 = x, Omega_2 = x^2 - 1/2 and
    Omega_m = x*Omega_{m-1} - (1/2)*Omega_{m-2}, the polynomial is
    ``x^2*Omega_{n-2} - (2/3)*x*Omega_{n-3} + (1/9)*Omega_{n-4}``.
    Omega_0 = 1 is forced by consistency with the determinant recurrence of
    tridiagonal matrices; it is needed exactly when n = 5.
    """
    if n < 5:
        raise ValueError(f"path recurrence is defined for n >= 5, got {n}")
    omegas = [np.array([1.0]), np.array([0.0, 1.0]), np.array([-0.5, 0.0, 1.0])]
    for m in range(3, n - 1):
        prev, prev2 = omegas[m - 1], omegas[m - 2]
        coeffs = np.zeros(m + 1)
        coeffs[1:] = prev
        coeffs[: m - 1] -= 0.5 * prev2
        omegas.append(coeffs)

    def shifted(coeffs, k, scale):
        out = np.zeros(k + coeffs.size)
        out[k:] = scale * coeffs
        return out

    terms = [
        shifted(omegas[n - 2], 2, 1.0),
        shifted(omegas[n - 3], 1, -2.0 / 3.0),
        shifted(omegas[n - 4], 0, 1.0 / 9.0),
    ]
    result = np.zeros(n + 1)
    for t in terms:
        result[: t.size] += t
    return result


def _require_connected_regular(graph, what):
    r = is_regular(graph)
    if r is None:
        raise ValueError(f"{what} needs a regular graph")
    if r < 1:
        raise ValueError(f"{what} needs degree r >= 1, got r = {r}")
    if not is_connected(graph):
        raise ValueError(f"{what} needs a connected graph")
    return r


def lift_quadratic(kind, r, base_eigenvalue):
    """Quadratic x^2 - B*x - C (ascending coefficients) lifting one base eigenvalue.

    For an r-regular graph, each eigenvalue of the base matrix (adjacency for
    subdivision and semitotal point, line-graph adjacency for semitotal line)
    yields two ABS eigenvalues of the transformed graph as the roots of this
    quadratic:

    * subdivision:      B = 0,                       C = r*(lam + r)/(r + 2)
    * semitotal_point:  B = sqrt((2r-1)/(2r))*lam,   C = lam*r/(r+1) + r^2/(r+1)
    * semitotal_line:   B = sqrt((4r-2)/(4r))*theta, C = (theta + 2)*(3r-2)/(3r)
    """
    lam = float(base_eigenvalue)
    if kind == "subdivision":
        b, c = 0.0, r * (lam + r) / (r + 2.0)
    elif kind == "semitotal_point":
        b = math.sqrt((2.0 * r - 1.0) / (2.0 * r)) * lam
        c = (r / (r + 1.0)) * lam + r * r / (r + 1.0)
    elif kind == "semitotal_line":
        b = math.sqrt((4.0 * r - 2.0) / (4.0 * r)) * lam
        c = ((3.0 * r - 2.0) / (3.0 * r)) * (lam + 2.0)
    else:
        raise ValueError(f"unknown lift kind {kind!r}; expected one of {LIFT_KINDS}")
    return np.array([-c, -b, 1.0])


def lift_base_spectrum(kind, graph):
    """Base eigenvalues fed into :func:`lift_quadratic` for the given transform."""
    if kind == "semitotal_line":
        return adjacency_spectrum(line_graph(graph))
    if kind in ("subdivision", "semitotal_point"):
        return adjacency_spectrum(graph)
    raise ValueError(f"unknown lift kind {kind!r}; expected one of {LIFT_KINDS}")


def predicted_transform_spectrum(kind, graph):
    """Predicted ABS spectrum of a transformed connected regular graph.

    Each base eigenvalue contributes the two roots of its lift quadratic.
    Subdivision and semitotal point then carry ``m - n`` extra zeros; the
    semitotal line graph carries ``n - m`` extra zeros. A negative surplus
    means that many structurally exact zero roots cancel instead, so the near
    -zero values are dropped. The result always has n + m values, sorted
    ascending, and matches the eigensolver on the constructed transform.
    """
    r = _require_connected_regular(graph, "predicted transform spectrum")
    n, m = graph.n, graph.m
    values = []
    for lam in lift_base_spectrum(kind, graph):
        c0, c1, _ = lift_quadratic(kind, r, lam)
        b, c = -c1, -c0
        disc = b * b + 4.0 * c
        # A base eigenvalue at -r makes the subdivision quadratic a double
        # root at 0; snap the discriminant there so the square root does not
        # amplify the base eigensolver's rounding error.
        disc = 0.0 if disc < 1e-10 else disc
        root = math.sqrt(disc)
        values.append((b + root) / 2.0)
        values.append((b - root) / 2.0)
    surplus = (n - m) if kind == "semitotal_line" else (m - n)
    if surplus >= 0:
        values.extend([0.0] * surplus)
        out = np.array(values)
    else:
        arr = np.array(values)
        keep = np.argsort(np.abs(arr), kind="stable")[-surplus:]
        out = arr[np.sort(keep)]
    return np.sort(out)


def splitting_energy_radicands(r, k):
    """(corrected, as printed) radicands of the k-splitting energy factor.

    The corrected value is ``a^2 + 4k b^2`` with ``a^2 = 1 - 1/(r(k+1))`` and
    ``b^2 = 1 - 2/(r(k+2))``, i.e. the squared eigenvalue gap of the (k+1)-order
    weight matrix of the splitting block structure. The printed value is
    ``(5rk^2 + 15rk - 9k + 10r - 10) / (r(k+1)(k+2))``; the two agree exactly
    at k = 1 and differ for k >= 2.
    """
    a2 = 1.0 - 1.0 / (r * (k + 1.0))
    b2 = 1.0 - 2.0 / (r * (k + 2.0))
    corrected = a2 + 4.0 * k * b2
    printed = (5.0 * r * k * k + 15.0 * r * k - 9.0 * k + 10.0 * r - 10.0) / (r * (k + 1.0) * (k + 2.0))
    return corrected, printed


def predicted_energy(kind, graph, k):
    """Predicted ABS energy of the k-splitting or k-shadow of a connected regular graph.

    Returns both the corrected and the as-printed reading; see
    :class:`PredictedEnergy`. The shadow factor is ``k*sqrt(1 - 1/(kr))`` in
    both readings, but the as-printed right-hand side multiplies the shadow
    graph's own adjacency energy (k times the base energy).
    """
    if kind not in ENERGY_PREDICTION_KINDS:
        raise ValueError(f"unknown energy prediction kind {kind!r}; expected one of {ENERGY_PREDICTION_KINDS}")
    if k < 1:
        raise ValueError(f"energy prediction needs k >= 1, got {k}")
    r = _require_connected_regular(graph, f"{kind} energy prediction")
    base_energy = adjacency_energy(graph).energy
    if kind == "shadow":
        factor = k * math.sqrt(1.0 - 1.0 / (k * r))
        corrected = factor * base_energy
        as_printed = factor * adjacency_energy(shadow(graph, k)).energy
    else:
        radicand, printed_radicand = splitting_energy_radicands(r, k)
        corrected = math.sqrt(radicand) * base_energy
        as_printed = math.sqrt(printed_radicand) * adjacency_energy(splitting(graph, k)).energy
    return PredictedEnergy(corrected=corrected, as_printed=as_printed)


def spectrum_report(graph, which="abs"):
    """Spectrum/energy summary used by the command-line front end.

    Keys: ``spectrum`` (ascending), ``energy``, ``trace_sq`` (sum of squared
    eigenvalues) and ``harmonic_check`` (``2*(m - H(G))``, the closed form the
    ABS trace square must equal).
    """
    if which == "abs":
        report = abs_energy(graph)
    elif which == "adjacency":
        report = adjacency_energy(graph)
    else:
        raise ValueError(f"unknown matrix selector {which!r}; expected 'abs' or 'adjacency'")
    trace_sq = math.fsum((x * x for x in report.spectrum.tolist()))
    harmonic_check = 2.0 * (graph.m - degree_index(graph, "harmonic"))
    return {
        "spectrum": report.spectrum.tolist(),
        "energy": report.energy,
        "trace_sq": trace_sq,
        "harmonic_check": harmonic_check,
    }
