//! Similitude systems and the deterministic subdivision chain.
//!
//! Each step applies every map of the system to every point of the current
//! path and stacks the results in map order. Two base conventions exist:
//!
//! * `Faithful` keeps a far-off sentinel point (100) in the base vector, the
//!   classic trick that breaks plotted line continuity between copies. Its
//!   descendants stay separable from the attractor only up to depth 5.
//! * `Structured` drops the sentinel and separates blocks with explicit
//!   pen-up markers instead.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::path::PointPath;

/// Hard depth bound for any mode.
pub const MAX_DEPTH: u32 = 10;
/// Depth bound in faithful mode: at depth 6 the sentinel descendants
/// (100/2^6 ~ 1.56) start colliding with the attractor's region.
pub const MAX_FAITHFUL_DEPTH: u32 = 5;
/// The far-off base point used by faithful mode.
pub const SENTINEL: f64 = 100.0;
/// Real-part threshold separating attractor points from sentinel
/// descendants, valid for all faithful depths up to [`MAX_FAITHFUL_DEPTH`].
pub const SENTINEL_THRESHOLD: f64 = 2.0;

/// A contraction `w(z) = scale * z + offset`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Similitude {
    pub scale: Complex,
    pub offset: Complex,
}

impl Similitude {
    pub const fn new(scale: Complex, offset: Complex) -> Self {
        Similitude { scale, offset }
    }

    pub fn apply(self, z: Complex) -> Complex {
        self.scale * z + self.offset
    }
}

/// A nonempty, ordered list of contractions.
#[derive(Clone, Debug, PartialEq)]
pub struct IfsSystem {
    name: String,
    maps: Vec<Similitude>,
}

impl IfsSystem {
    pub fn new(name: impl Into<String>, maps: Vec<Similitude>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::EmptySystem);
        }
        for map in &maps {
            if !(map.scale.modulus() < 1.0) {
                return Err(Error::NotAContraction(map.scale));
            }
        }
        Ok(IfsSystem {
            name: name.into(),
            maps,
        })
    }

    /// Preset `paper`: the right-angle gasket maps `z/2`, `(z+1)/2`,
    /// `(z+i)/2`.
    pub fn paper() -> Self {
        let half = Complex::new(0.5, 0.0);
        IfsSystem::new(
            "paper",
            vec![
                Similitude::new(half, Complex::ZERO),
                Similitude::new(half, Complex::new(0.5, 0.0)),
                Similitude::new(half, Complex::new(0.0, 0.5)),
            ],
        )
        .expect("preset is valid")
    }

    /// Preset `equilateral`: same scale, offsets chosen so the attractor is
    /// the gasket over the triangle `0, 1, 1/2 + i sqrt(3)/2` — the same
    /// triangle the recursive subdivision starts from, which makes the two
    /// constructions directly comparable.
    pub fn equilateral() -> Self {
        let half = Complex::new(0.5, 0.0);
        IfsSystem::new(
            "equilateral",
            vec![
                Similitude::new(half, Complex::ZERO),
                Similitude::new(half, Complex::new(0.5, 0.0)),
                Similitude::new(half, Complex::new(0.25, 3f64.sqrt() / 4.0)),
            ],
        )
        .expect("preset is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn maps(&self) -> &[Similitude] {
        &self.maps
    }
}

/// Base vector convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseMode {
    /// Numeric sentinel kept as an ordinary point.
    Faithful,
    /// Sentinel replaced by pen-up separators inserted while stacking.
    Structured,
}

/// The starting path: the closed unit-triangle outline `0, 1,
/// 1/2 + i sqrt(3)/2, 0`, plus the sentinel point in faithful mode.
pub fn base_vector(mode: BaseMode) -> PointPath {
    let apex = Complex::new(0.5, 3f64.sqrt() / 2.0);
    let mut points = vec![Complex::ZERO, Complex::ONE, apex, Complex::ZERO];
    if mode == BaseMode::Faithful {
        points.push(Complex::new(SENTINEL, 0.0));
    }
    PointPath::from_points(points)
}

/// Stacks three paths. Faithful: plain concatenation. Structured: pen-up
/// separators between blocks.
pub fn concat3(mode: BaseMode, u1: &PointPath, u2: &PointPath, u3: &PointPath) -> PointPath {
    concat_blocks(mode, [u1, u2, u3])
}

/// `concat3` generalized to any number of blocks, in block order.
pub fn concat_blocks<'a, I>(mode: BaseMode, blocks: I) -> PointPath
where
    I: IntoIterator<Item = &'a PointPath>,
{
    let separate = mode == BaseMode::Structured;
    let mut out = PointPath::new();
    for block in blocks {
        out.append(block, separate);
    }
    out
}

/// One subdivision step: applies every map of `sys` elementwise to `g`
/// (separators pass through), then stacks the blocks in map order.
///
/// In faithful mode the sentinel is transformed like any other point, which
/// reproduces plain vectorized arithmetic over the whole column.
pub fn ifs_step(sys: &IfsSystem, mode: BaseMode, g: &PointPath) -> PointPath {
    let blocks: Vec<PointPath> = sys
        .maps()
        .iter()
        .map(|w| g.map_points(|z| w.apply(z)))
        .collect();
    concat_blocks(mode, &blocks)
}

/// Validates a depth request for the given mode.
pub fn check_depth(mode: BaseMode, depth: u32) -> Result<()> {
    if depth > MAX_DEPTH {
        return Err(Error::DepthOutOfRange {
            depth,
            max: MAX_DEPTH,
        });
    }
    if mode == BaseMode::Faithful && depth > MAX_FAITHFUL_DEPTH {
        return Err(Error::SentinelInseparable);
    }
    Ok(())
}

/// Applies `depth` subdivision steps to the base vector. Depth 0 is the
/// base itself; faithful mode yields `5 * 3^depth` points.
pub fn generate(sys: &IfsSystem, mode: BaseMode, depth: u32) -> Result<PointPath> {
    check_depth(mode, depth)?;
    let mut g = base_vector(mode);
    for _ in 0..depth {
        g = ifs_step(sys, mode, &g);
    }
    Ok(g)
}

/// A faithful-mode path split into attractor points and sentinel
/// descendants, both preserving path order.
#[derive(Clone, Debug, PartialEq)]
pub struct SentinelSplit {
    pub attractor: PointPath,
    pub sentinels: PointPath,
}

/// Partitions the points of a faithful-mode path: anything with real part
/// above [`SENTINEL_THRESHOLD`] descends from the sentinel. Valid for paths
/// produced by [`generate`] at faithful depths.
pub fn classify_sentinels(g: &PointPath) -> SentinelSplit {
    let mut attractor = Vec::new();
    let mut sentinels = Vec::new();
    for z in g.points() {
        if z.re > SENTINEL_THRESHOLD {
            sentinels.push(z);
        } else {
            attractor.push(z);
        }
    }
    SentinelSplit {
        attractor: PointPath::from_points(attractor),
        sentinels: PointPath::from_points(sentinels),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex, b: Complex, tol: f64) -> bool {
        (a - b).modulus() <= tol
    }

    #[test]
    fn base_vector_faithful_matches_the_column() {
        let base = base_vector(BaseMode::Faithful);
        let points: Vec<Complex> = base.points().collect();
        assert_eq!(points.len(), 5);
        assert_eq!(base.pen_up_count(), 0);
        assert_eq!(points[0], Complex::ZERO);
        assert_eq!(points[1], Complex::ONE);
        assert!(close(points[2], Complex::new(0.5, 0.8660254037844386), 1e-12));
        assert_eq!(points[3], Complex::ZERO);
        assert_eq!(points[4], Complex::new(100.0, 0.0));
    }

    #[test]
    fn base_vector_structured_has_no_sentinel() {
        let base = base_vector(BaseMode::Structured);
        assert_eq!(base.point_count(), 4);
        assert_eq!(base.pen_up_count(), 0);
    }

    #[test]
    fn concat3_singletons() {
        let u1 = PointPath::from_points([Complex::ZERO]);
        let u2 = PointPath::from_points([Complex::ONE]);
        let u3 = PointPath::from_points([Complex::I]);

        let faithful = concat3(BaseMode::Faithful, &u1, &u2, &u3);
        assert_eq!(faithful.point_count(), 3);
        assert_eq!(faithful.pen_up_count(), 0);

        let structured = concat3(BaseMode::Structured, &u1, &u2, &u3);
        assert_eq!(structured.point_count(), 3);
        assert_eq!(structured.pen_up_count(), 2);
    }

    #[test]
    fn concat3_base_blocks() {
        let b = base_vector(BaseMode::Faithful);
        let stacked = concat3(BaseMode::Faithful, &b, &b, &b);
        assert_eq!(stacked.point_count(), 15);
    }

    #[test]
    fn step_on_a_single_point() {
        let g = PointPath::from_points([Complex::ZERO]);
        let out = ifs_step(&IfsSystem::paper(), BaseMode::Faithful, &g);
        let points: Vec<Complex> = out.points().collect();
        assert_eq!(points, vec![Complex::ZERO, Complex::new(0.5, 0.0), Complex::new(0.0, 0.5)]);
    }

    #[test]
    fn step_on_the_faithful_base() {
        let base = base_vector(BaseMode::Faithful);
        let out = ifs_step(&IfsSystem::paper(), BaseMode::Faithful, &base);
        let points: Vec<Complex> = out.points().collect();
        assert_eq!(points.len(), 15);

        // First block: B/2.
        let sqrt3_4 = 3f64.sqrt() / 4.0;
        assert_eq!(points[0], Complex::ZERO);
        assert_eq!(points[1], Complex::new(0.5, 0.0));
        assert!(close(points[2], Complex::new(0.25, sqrt3_4), 1e-12));
        assert_eq!(points[3], Complex::ZERO);
        assert_eq!(points[4], Complex::new(50.0, 0.0));

        // Second block: (B + 1)/2.
        assert_eq!(points[5], Complex::new(0.5, 0.0));
        assert_eq!(points[6], Complex::ONE);
        assert!(close(points[7], Complex::new(0.75, sqrt3_4), 1e-12));
        assert_eq!(points[8], Complex::new(0.5, 0.0));
        assert_eq!(points[9], Complex::new(50.5, 0.0));

        // Third block ends with the (100 + i)/2 sentinel image.
        assert_eq!(points[14], Complex::new(50.0, 0.5));
    }

    #[test]
    fn generate_depth_zero_is_the_base() {
        let sys = IfsSystem::paper();
        assert_eq!(
            generate(&sys, BaseMode::Faithful, 0).unwrap(),
            base_vector(BaseMode::Faithful)
        );
    }

    #[test]
    fn generate_faithful_counts() {
        let sys = IfsSystem::paper();
        for depth in 0..=5 {
            let g = generate(&sys, BaseMode::Faithful, depth).unwrap();
            assert_eq!(g.point_count(), 5 * 3usize.pow(depth));
            assert_eq!(g.pen_up_count(), 0);
        }
    }

    #[test]
    fn generate_structured_depth_one() {
        let g = generate(&IfsSystem::paper(), BaseMode::Structured, 1).unwrap();
        assert_eq!(g.point_count(), 12);
        assert_eq!(g.pen_up_count(), 2);
    }

    #[test]
    fn depth_bounds() {
        let sys = IfsSystem::paper();
        assert!(matches!(
            generate(&sys, BaseMode::Structured, MAX_DEPTH + 1),
            Err(Error::DepthOutOfRange { .. })
        ));
        let err = generate(&sys, BaseMode::Faithful, 6).unwrap_err();
        assert_eq!(err.to_string(), "sentinel inseparable beyond depth 5");
        assert!(generate(&sys, BaseMode::Structured, 6).is_ok());
    }

    #[test]
    fn classify_depth_zero_and_one() {
        let sys = IfsSystem::paper();

        let g0 = generate(&sys, BaseMode::Faithful, 0).unwrap();
        let split = classify_sentinels(&g0);
        assert_eq!(split.sentinels.point_count(), 1);
        assert_eq!(split.attractor.point_count(), 4);

        let g1 = generate(&sys, BaseMode::Faithful, 1).unwrap();
        let split = classify_sentinels(&g1);
        let sentinels: Vec<Complex> = split.sentinels.points().collect();
        assert_eq!(
            sentinels,
            vec![
                Complex::new(50.0, 0.0),
                Complex::new(50.5, 0.0),
                Complex::new(50.0, 0.5),
            ]
        );
    }

    #[test]
    fn classify_depth_five() {
        let g = generate(&IfsSystem::paper(), BaseMode::Faithful, 5).unwrap();
        let split = classify_sentinels(&g);
        assert_eq!(split.sentinels.point_count(), 243);
        assert_eq!(split.attractor.point_count(), 972);
    }

    #[test]
    fn stacking_order_is_exact() {
        let sys = IfsSystem::paper();
        for mode in [BaseMode::Faithful, BaseMode::Structured] {
            for depth in 0..4 {
                let g = generate(&sys, mode, depth).unwrap();
                let blocks: Vec<PointPath> = sys
                    .maps()
                    .iter()
                    .map(|w| g.map_points(|z| w.apply(z)))
                    .collect();
                let by_hand = concat3(mode, &blocks[0], &blocks[1], &blocks[2]);
                assert_eq!(generate(&sys, mode, depth + 1).unwrap(), by_hand);
            }
        }
    }

    #[test]
    fn system_validation() {
        assert!(matches!(IfsSystem::new("x", vec![]), Err(Error::EmptySystem)));
        let expanding = Similitude::new(Complex::new(1.0, 0.0), Complex::ZERO);
        assert!(matches!(
            IfsSystem::new("x", vec![expanding]),
            Err(Error::NotAContraction(_))
        ));
    }
}
