use std::collections::BTreeMap;
use std::fmt;

use super::Pointed;

pub type PointId = u32;

/// The label playing the role of the basepoint of the label space.
pub const BASEPOINT_LABEL: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Point {
    label: Option<u32>,
    in_m0: bool,
}

/// A finite configuration of distinct points with optional labels.
///
/// As an element of `V` the empty configuration and every degenerate one
/// (a point in `M₀` or carrying the basepoint label) are the basepoint.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LabelledConfig {
    points: BTreeMap<PointId, Point>,
}

impl LabelledConfig {
    /// Unlabelled configuration on the given points; duplicates collapse.
    pub fn new(ids: impl IntoIterator<Item = PointId>) -> Self {
        LabelledConfig {
            points: ids
                .into_iter()
                .map(|i| {
                    (
                        i,
                        Point {
                            label: None,
                            in_m0: false,
                        },
                    )
                })
                .collect(),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Set the label of a point, adding the point if absent.
    pub fn with_label(mut self, id: PointId, label: u32) -> Self {
        self.points
            .entry(id)
            .or_insert(Point {
                label: None,
                in_m0: false,
            })
            .label = Some(label);
        self
    }

    /// Mark a point as lying in `M₀`, adding it if absent.
    pub fn with_m0(mut self, id: PointId) -> Self {
        self.points
            .entry(id)
            .or_insert(Point {
                label: None,
                in_m0: false,
            })
            .in_m0 = true;
        self
    }

    pub fn ids(&self) -> impl Iterator<Item = PointId> + '_ {
        self.points.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn label(&self, id: PointId) -> Option<u32> {
        self.points.get(&id).and_then(|p| p.label)
    }

    pub fn is_degenerate(&self) -> bool {
        self.points
            .values()
            .any(|p| p.in_m0 || p.label == Some(BASEPOINT_LABEL))
    }

    /// `ξ_J`: the sub-configuration on the points of `subset` (a bit mask
    /// over `ids()` in increasing order).
    pub fn restrict_mask(&self, subset: u64) -> Self {
        LabelledConfig {
            points: self
                .points
                .iter()
                .enumerate()
                .filter(|(i, _)| subset & (1 << i) != 0)
                .map(|(_, (&id, &p))| (id, p))
                .collect(),
        }
    }

    pub fn restrict(&self, ids: &[PointId]) -> Self {
        LabelledConfig {
            points: self
                .points
                .iter()
                .filter(|(id, _)| ids.contains(id))
                .map(|(&id, &p)| (id, p))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut points = self.points.clone();
        points.extend(other.points.iter().map(|(&i, &p)| (i, p)));
        LabelledConfig { points }
    }
}

impl Pointed for LabelledConfig {
    fn is_basepoint(&self) -> bool {
        self.is_empty() || self.is_degenerate()
    }
}

impl fmt::Debug for LabelledConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ξ{{")?;
        for (n, (id, p)) in self.points.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{id}")?;
            match p.label {
                Some(BASEPOINT_LABEL) => write!(f, ":*")?,
                Some(l) => write!(f, ":{l}")?,
                None => {}
            }
            if p.in_m0 {
                write!(f, "@M0")?;
            }
        }
        write!(f, "}}")
    }
}

/// A configuration viewed in a single filtration quotient `D_k`, where the
/// empty configuration is a genuine point and only degenerate ones are the
/// basepoint.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graded(pub LabelledConfig);

impl Pointed for Graded {
    fn is_basepoint(&self) -> bool {
        self.0.is_degenerate()
    }
}

impl fmt::Debug for Graded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A configuration split into blue and red points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredConfig {
    pub blue: LabelledConfig,
    pub red: LabelledConfig,
}

impl ColoredConfig {
    /// Forget the colors.
    pub fn forget(&self) -> LabelledConfig {
        self.blue.union(&self.red)
    }

    /// All colorings of `xi` with `n` blue points.
    pub fn colorings(xi: &LabelledConfig, n: usize) -> Vec<ColoredConfig> {
        let full = (1u64 << xi.len()) - 1;
        (0..=full)
            .filter(|a| a.count_ones() as usize == n)
            .map(|a| ColoredConfig {
                blue: xi.restrict_mask(a),
                red: xi.restrict_mask(full & !a),
            })
            .collect()
    }
}

impl Pointed for ColoredConfig {
    fn is_basepoint(&self) -> bool {
        self.blue.is_degenerate() || self.red.is_degenerate()
    }
}
