//! The two surfaces everything runs on: the flat torus T^2 = R^2/Z^2 and
//! the genus-two surface built from two punctured tori glued along an
//! annulus by the inversion psi(x) = x/|x|^2.
//!
//! # Charts
//!
//! Points are addressed by chart ([`ChartId`]): torus charts carry
//! coordinates mod 1, disk charts carry Euclidean coordinates with norm at
//! most 2. Each torus carries one disk chart of radius 2, placed affinely
//! around the marked fixed point `p_i = (0,0)` with [`CHART_SCALE`] torus
//! units per chart unit. The open disk of chart radius 1/2 is removed from
//! each torus and the remaining annuli `1/2 <= |x| <= 2` are identified by
//! `Disk1: x ~ Disk2: psi(x)`.
//!
//! # Metric
//!
//! On the torus, distance is the exact wrap-around Euclidean metric. On the
//! glued surface we use the Euclidean distance of a continuous injective
//! embedding into R^8 (a pair of flat-torus embeddings weighted by a
//! partition of unity across the gluing), scaled by [`METRIC_SCALE`]. This
//! satisfies the metric axioms exactly and is uniformly equivalent to
//! chart-wise Euclidean distance; expansivity constants quoted for the
//! glued surface refer to this metric.

use crate::float::{norm2, FloatExt};
use crate::{Error, Result};

/// Torus units per disk-chart unit on the glued surface.
///
/// A dyadic value so chart/torus conversions are exact in f64, and small
/// enough that the derived-from-Anosov body dynamics stays an honest
/// diffeomorphism around the conformal gluing corridor; see the maps module
/// for the constraint.
pub const CHART_SCALE: f64 = 1.0 / 128.0;

/// Torus radius of the full disk chart (chart norm 2).
pub const CHART_OUTER_RADIUS: f64 = 2.0 * CHART_SCALE;

/// Metric normalization for the glued surface: with this factor one
/// disk-chart unit measures about 1/8 (away from the seam, within a small
/// factor across it), so thresholds like delta = 0.05 keep the same meaning
/// relative to the annulus as on a unit-scale picture.
pub const METRIC_SCALE: f64 = (1.0 / 8.0) / CHART_SCALE;

const PI2: f64 = core::f64::consts::TAU;

/// Chart identifiers for [`ChartPoint`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChartId {
    Torus1,
    Torus2,
    Disk1,
    Disk2,
}

/// A surface point as (chart, coordinates).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartPoint {
    pub chart: ChartId,
    pub coords: [f64; 2],
}

impl ChartPoint {
    /// Torus-chart point, coordinates normalized into [0,1)^2.
    pub fn torus(chart: ChartId, coords: [f64; 2]) -> Result<Self> {
        match chart {
            ChartId::Torus1 | ChartId::Torus2 => Ok(ChartPoint {
                chart,
                coords: [wrap01(coords[0]), wrap01(coords[1])],
            }),
            _ => Err(Error::Domain("torus() requires a torus chart id")),
        }
    }

    /// Disk-chart point; the norm must not exceed 2 beyond tolerance 1e-12.
    pub fn disk(chart: ChartId, coords: [f64; 2]) -> Result<Self> {
        match chart {
            ChartId::Disk1 | ChartId::Disk2 => {
                if norm2(coords) > 2.0 + 1e-12 {
                    return Err(Error::Domain("disk coordinates exceed radius 2"));
                }
                Ok(ChartPoint { chart, coords })
            }
            _ => Err(Error::Domain("disk() requires a disk chart id")),
        }
    }

    pub fn on_torus1(x: f64, y: f64) -> Self {
        ChartPoint {
            chart: ChartId::Torus1,
            coords: [wrap01(x), wrap01(y)],
        }
    }

    pub fn is_disk(&self) -> bool {
        matches!(self.chart, ChartId::Disk1 | ChartId::Disk2)
    }
}

#[inline]
pub fn wrap01(x: f64) -> f64 {
    let w = x - x.floor_();
    // floor of a value just below an integer can leave w == 1.0
    if w >= 1.0 {
        0.0
    } else {
        w
    }
}

/// Signed representative of x mod 1 in [-1/2, 1/2).
#[inline]
pub fn wrap_signed(x: f64) -> f64 {
    let w = wrap01(x + 0.5) - 0.5;
    w
}

/// The inversion psi(x) = x / |x|^2 on the annulus 1/2 <= |x| <= 2.
pub fn inversion(x: [f64; 2]) -> Result<[f64; 2]> {
    let n = norm2(x);
    if !(0.5 - 1e-12..=2.0 + 1e-12).contains(&n) {
        return Err(Error::Domain("inversion defined on 1/2 <= |x| <= 2 only"));
    }
    let n2 = x[0] * x[0] + x[1] * x[1];
    Ok([x[0] / n2, x[1] / n2])
}

/// The flat torus with the exact wrap-around metric.
#[derive(Debug, Clone, Copy, Default)]
pub struct Torus;

impl Torus {
    /// Minimum over the lattice translates: per-axis wrap, then Euclidean.
    pub fn distance(&self, p: [f64; 2], q: [f64; 2]) -> f64 {
        let dx = wrap_signed(p[0] - q[0]);
        let dy = wrap_signed(p[1] - q[1]);
        dx.hypot_(dy)
    }
}

/// Descriptor of the genus-two glued surface.
///
/// Fields are fixed by the construction: annulus radii 1/2 and 2 in chart
/// units, deleted disk of chart radius 1/2.
#[derive(Debug, Clone, Copy)]
pub struct GluedSurface {
    pub inner_radius: f64,
    pub outer_radius: f64,
    pub deleted_radius: f64,
}

impl Default for GluedSurface {
    fn default() -> Self {
        GluedSurface {
            inner_radius: 0.5,
            outer_radius: 2.0,
            deleted_radius: 0.5,
        }
    }
}

/// Internal canonical representation: which torus body carries the point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Side {
    One([f64; 2]),
    Two([f64; 2]),
}

impl GluedSurface {
    pub fn new() -> Self {
        Self::default()
    }

    /// Deterministic representative of the equivalence class of `p`.
    ///
    /// Torus points are normalized mod 1. Disk points keep their chart when
    /// the canonical criterion (norm below 1, the psi-fixed circle) holds
    /// and are pushed through psi otherwise. The unit circle itself is
    /// canonical in Disk2 so that the map is idempotent and constant on
    /// equivalence classes.
    pub fn canonical_rep(&self, p: ChartPoint) -> Result<ChartPoint> {
        match p.chart {
            ChartId::Torus1 | ChartId::Torus2 => ChartPoint::torus(p.chart, p.coords),
            ChartId::Disk1 => {
                let n = norm2(p.coords);
                self.check_disk_range(n)?;
                if n >= 1.0 {
                    ChartPoint::disk(ChartId::Disk2, inversion(p.coords)?)
                } else {
                    Ok(p)
                }
            }
            ChartId::Disk2 => {
                let n = norm2(p.coords);
                self.check_disk_range(n)?;
                if n > 1.0 {
                    ChartPoint::disk(ChartId::Disk1, inversion(p.coords)?)
                } else {
                    Ok(p)
                }
            }
        }
    }

    fn check_disk_range(&self, n: f64) -> Result<()> {
        if n < self.deleted_radius - 1e-12 {
            return Err(Error::Domain(
                "disk coordinates inside the deleted disk of the glued surface",
            ));
        }
        if n > self.outer_radius + 1e-12 {
            return Err(Error::Domain("disk coordinates exceed radius 2"));
        }
        Ok(())
    }

    /// Torus-1 coordinates of a disk-chart position (affine placement).
    pub fn disk_to_torus(&self, chart: ChartId, x: [f64; 2]) -> [f64; 2] {
        debug_assert!(matches!(chart, ChartId::Disk1 | ChartId::Disk2));
        [wrap01(x[0] * CHART_SCALE), wrap01(x[1] * CHART_SCALE)]
    }

    /// Disk coordinates of a torus position near the marked point, if the
    /// point lies within the chart (torus distance at most 2*CHART_SCALE).
    pub fn torus_to_disk(&self, t: [f64; 2]) -> Option<[f64; 2]> {
        let vx = wrap_signed(t[0]);
        let vy = wrap_signed(t[1]);
        let r = vx.hypot_(vy);
        if r <= CHART_OUTER_RADIUS + 1e-15 {
            Some([vx / CHART_SCALE, vy / CHART_SCALE])
        } else {
            None
        }
    }

    /// Resolve any chart point to its torus side(s).
    ///
    /// Points of the gluing annulus have representatives on both tori; the
    /// canonical side is Torus1 for disk-1 norm > 1 and Torus2 otherwise.
    pub fn resolve(&self, p: ChartPoint) -> Result<Side> {
        match p.chart {
            ChartId::Torus1 => {
                let d1 = self.torus_to_disk(p.coords);
                if let Some(x) = d1 {
                    let n = norm2(x);
                    self.check_disk_range(n)?;
                    if n <= 1.0 {
                        // across the seam: canonical on torus 2
                        let y = inversion(x)?;
                        return Ok(Side::Two(self.disk_to_torus(ChartId::Disk2, y)));
                    }
                }
                Ok(Side::One([wrap01(p.coords[0]), wrap01(p.coords[1])]))
            }
            ChartId::Torus2 => {
                let d2 = self.torus_to_disk(p.coords);
                if let Some(x) = d2 {
                    let n = norm2(x);
                    self.check_disk_range(n)?;
                    if n < 1.0 {
                        let y = inversion(x)?;
                        return Ok(Side::One(self.disk_to_torus(ChartId::Disk1, y)));
                    }
                }
                Ok(Side::Two([wrap01(p.coords[0]), wrap01(p.coords[1])]))
            }
            ChartId::Disk1 => {
                let n = norm2(p.coords);
                self.check_disk_range(n)?;
                if n > 1.0 {
                    Ok(Side::One(self.disk_to_torus(ChartId::Disk1, p.coords)))
                } else {
                    let y = inversion(p.coords)?;
                    Ok(Side::Two(self.disk_to_torus(ChartId::Disk2, y)))
                }
            }
            ChartId::Disk2 => {
                let n = norm2(p.coords);
                self.check_disk_range(n)?;
                if n > 1.0 {
                    let y = inversion(p.coords)?;
                    Ok(Side::One(self.disk_to_torus(ChartId::Disk1, y)))
                } else {
                    Ok(Side::Two(self.disk_to_torus(ChartId::Disk2, p.coords)))
                }
            }
        }
    }

    /// Side back to a chart point (torus chart of the owning body).
    pub fn side_to_point(&self, s: Side) -> ChartPoint {
        match s {
            Side::One(t) => ChartPoint {
                chart: ChartId::Torus1,
                coords: t,
            },
            Side::Two(t) => ChartPoint {
                chart: ChartId::Torus2,
                coords: t,
            },
        }
    }

    /// Both-torus representatives where they exist: (torus1, torus2).
    fn reps(&self, s: Side) -> (Option<[f64; 2]>, Option<[f64; 2]>) {
        match s {
            Side::One(t) => {
                let mut other = None;
                if let Some(x) = self.torus_to_disk(t) {
                    let n = norm2(x);
                    if (0.5 - 1e-12..=2.0 + 1e-12).contains(&n) {
                        if let Ok(y) = inversion(x) {
                            other = Some(self.disk_to_torus(ChartId::Disk2, y));
                        }
                    }
                }
                (Some(t), other)
            }
            Side::Two(t) => {
                let mut other = None;
                if let Some(x) = self.torus_to_disk(t) {
                    let n = norm2(x);
                    if (0.5 - 1e-12..=2.0 + 1e-12).contains(&n) {
                        if let Ok(y) = inversion(x) {
                            other = Some(self.disk_to_torus(ChartId::Disk1, y));
                        }
                    }
                }
                (other, Some(t))
            }
        }
    }

    /// Side weighting across the gluing: +1 deep in torus 1, -1 deep in
    /// torus 2, log-radial in the annulus (antisymmetric under psi).
    fn side_coordinate(&self, s: Side) -> f64 {
        let (d, sign) = match s {
            Side::One(t) => (self.torus_to_disk(t), 1.0),
            Side::Two(t) => (self.torus_to_disk(t), -1.0),
        };
        match d {
            None => sign,
            Some(x) => {
                let n = norm2(x).max(0.5).min(2.0);
                sign * (n.ln_() / core::f64::consts::LN_2).clamp(-1.0, 1.0)
            }
        }
    }

    /// Flat-torus embedding e: T^2 -> R^4, a local isometry.
    fn embed_torus(t: [f64; 2]) -> [f64; 4] {
        let (s0, c0) = (PI2 * t[0]).sin_cos_();
        let (s1, c1) = (PI2 * t[1]).sin_cos_();
        [c0 / PI2, s0 / PI2, c1 / PI2, s1 / PI2]
    }

    /// The R^8 embedding of a surface point.
    pub fn embed(&self, p: ChartPoint) -> Result<[f64; 8]> {
        let side = self.resolve(p)?;
        let (r1, r2) = self.reps(side);
        let sigma = self.side_coordinate(side);
        let b1 = (1.0 + sigma) / 2.0;
        let b2 = (1.0 - sigma) / 2.0;
        let mut out = [0.0; 8];
        if let Some(t) = r1 {
            let e = Self::embed_torus(t);
            for k in 0..4 {
                out[k] = b1 * e[k];
            }
        }
        if let Some(t) = r2 {
            let e = Self::embed_torus(t);
            for k in 0..4 {
                out[4 + k] = b2 * e[k];
            }
        }
        Ok(out)
    }

    /// Distance on the glued surface; exact metric axioms by construction.
    pub fn distance(&self, p: ChartPoint, q: ChartPoint) -> Result<f64> {
        let a = self.embed(p)?;
        let b = self.embed(q)?;
        let mut acc = 0.0;
        for k in 0..8 {
            let d = a[k] - b[k];
            acc += d * d;
        }
        Ok(acc.sqrt_() * METRIC_SCALE)
    }
}

/// A surface domain: either the plain torus or the glued genus-two surface.
#[derive(Debug, Clone, Copy)]
pub enum SurfaceDomain {
    Torus(Torus),
    Glued(GluedSurface),
}

impl SurfaceDomain {
    pub fn distance(&self, p: &ChartPoint, q: &ChartPoint) -> Result<f64> {
        match self {
            SurfaceDomain::Torus(t) => {
                if p.is_disk() || q.is_disk() {
                    return Err(Error::Domain("torus domain expects torus charts"));
                }
                Ok(t.distance(p.coords, q.coords))
            }
            SurfaceDomain::Glued(g) => g.distance(*p, *q),
        }
    }

    pub fn is_glued(&self) -> bool {
        matches!(self, SurfaceDomain::Glued(_))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inversion_fixed_and_examples() {
        assert_eq!(inversion([1.0, 0.0]).unwrap(), [1.0, 0.0]);
        assert_eq!(inversion([2.0, 0.0]).unwrap(), [0.5, 0.0]);
        assert_eq!(inversion([0.0, 0.5]).unwrap(), [0.0, 2.0]);
        assert!(inversion([0.3, 0.0]).is_err());
        assert!(inversion([2.3, 0.0]).is_err());
    }

    #[test]
    fn canonical_rep_examples() {
        let g = GluedSurface::new();
        let p = ChartPoint::disk(ChartId::Disk1, [1.5, 0.0]).unwrap();
        let c = g.canonical_rep(p).unwrap();
        assert_eq!(c.chart, ChartId::Disk2);
        assert!((c.coords[0] - 2.0 / 3.0).abs() < 1e-15);
        let p = ChartPoint::disk(ChartId::Disk1, [0.6, 0.0]).unwrap();
        assert_eq!(g.canonical_rep(p).unwrap(), p);
    }

    #[test]
    fn canonical_rep_idempotent_and_class_constant() {
        let g = GluedSurface::new();
        let mut rng = crate::sampling::SplitMix64::new(11);
        for _ in 0..500 {
            let r = rng.uniform(0.5, 2.0);
            let th = rng.uniform(0.0, PI2);
            let (s, c) = th.sin_cos_();
            let x = [r * c, r * s];
            let p1 = ChartPoint::disk(ChartId::Disk1, x).unwrap();
            let p2 = ChartPoint::disk(ChartId::Disk2, inversion(x).unwrap()).unwrap();
            let c1 = g.canonical_rep(p1).unwrap();
            let c2 = g.canonical_rep(p2).unwrap();
            assert_eq!(c1.chart, c2.chart);
            assert!((c1.coords[0] - c2.coords[0]).abs() < 1e-12);
            assert!((c1.coords[1] - c2.coords[1]).abs() < 1e-12);
            let cc = g.canonical_rep(c1).unwrap();
            assert_eq!(cc, c1);
        }
    }

    #[test]
    fn torus_distance_wraps() {
        let t = Torus;
        assert!((t.distance([0.05, 0.0], [0.95, 0.0]) - 0.1).abs() < 1e-15);
        assert_eq!(t.distance([0.3, 0.7], [0.3, 0.7]), 0.0);
    }

    #[test]
    fn glued_distance_identified_pair_is_zero() {
        let g = GluedSurface::new();
        let p = ChartPoint::disk(ChartId::Disk1, [2.0, 0.0]).unwrap();
        let q = ChartPoint::disk(ChartId::Disk2, [0.5, 0.0]).unwrap();
        assert!(g.distance(p, q).unwrap() <= 1e-14);
        assert_eq!(g.distance(p, p).unwrap(), 0.0);
    }

    #[test]
    fn glued_distance_metric_axioms() {
        let g = GluedSurface::new();
        let mut rng = crate::sampling::SplitMix64::new(5);
        let mut sample = |rng: &mut crate::sampling::SplitMix64| -> ChartPoint {
            // mix of annulus and body points
            if rng.next_f64() < 0.5 {
                let r = rng.uniform(0.5, 2.0);
                let th = rng.uniform(0.0, PI2);
                let (s, c) = th.sin_cos_();
                let chart = if rng.next_f64() < 0.5 {
                    ChartId::Disk1
                } else {
                    ChartId::Disk2
                };
                ChartPoint::disk(chart, [r * c, r * s]).unwrap()
            } else {
                let chart = if rng.next_f64() < 0.5 {
                    ChartId::Torus1
                } else {
                    ChartId::Torus2
                };
                ChartPoint::torus(chart, [rng.next_f64(), rng.next_f64()]).unwrap()
            }
        };
        for _ in 0..2000 {
            let a = sample(&mut rng);
            let b = sample(&mut rng);
            let c = sample(&mut rng);
            let dab = g.distance(a, b).unwrap();
            let dba = g.distance(b, a).unwrap();
            assert_eq!(dab, dba);
            let dac = g.distance(a, c).unwrap();
            let dcb = g.distance(c, b).unwrap();
            assert!(dab <= dac + dcb + 1e-9, "triangle: {dab} > {dac} + {dcb}");
        }
    }

    #[test]
    fn torus_points_near_deleted_disk_are_rejected() {
        let g = GluedSurface::new();
        let p = ChartPoint::disk(ChartId::Disk1, [0.3, 0.0]);
        assert!(p.is_ok(), "chart point itself is in range of the disk");
        assert!(g.resolve(p.unwrap()).is_err());
    }
}
