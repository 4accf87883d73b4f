use std::fmt;

use crate::error::{invalid, Error, Result};

/// Uniform grid on `[origin, origin + length]` with `n` interior nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub origin: f64,
    pub length: f64,
    pub n: usize,
    pub h: f64,
}

impl Grid1D {
    /// Coordinate of node `j`; `j = 0` and `j = n + 1` are the boundary.
    pub fn node(&self, j: usize) -> f64 {
        self.origin + j as f64 * self.h
    }

    pub fn with_origin(mut self, origin: f64) -> Self {
        self.origin = origin;
        self
    }
}

pub fn make_grid_1d(length: f64, n: usize) -> Result<Grid1D> {
    if n < 3 {
        return Err(invalid("n", format!("need at least 3 interior points, got {n}")));
    }
    if !(length > 0.0 && length.is_finite()) {
        return Err(invalid("length", format!("must be positive, got {length}")));
    }
    Ok(Grid1D {
        origin: 0.0,
        length,
        n,
        h: length / (n + 1) as f64,
    })
}

/// How a requested 2D overlap of `c` cells is split across an interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverlapConvention {
    /// Each side is widened by `c`; the shared strip is `2c` cells.
    Half,
    /// The shared strip is `c` cells: `ceil(c/2)` to the right, `floor(c/2)` to the left.
    Full,
}

impl OverlapConvention {
    fn extensions(self, c: usize) -> (usize, usize) {
        match self {
            OverlapConvention::Half => (c, c),
            OverlapConvention::Full => (c / 2, c.div_ceil(2)),
        }
    }
}

impl fmt::Display for OverlapConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OverlapConvention::Half => "half",
            OverlapConvention::Full => "full",
        })
    }
}

impl std::str::FromStr for OverlapConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "half" => Ok(OverlapConvention::Half),
            "full" => Ok(OverlapConvention::Full),
            other => Err(Error::Unknown {
                kind: "overlap convention",
                name: other.to_string(),
            }),
        }
    }
}

/// A node value a subdomain takes from a neighbour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InterfaceRead {
    /// Global node index `(x, y)`; 1D layouts use `y = 1`.
    pub node: [usize; 2],
    /// Local interior node that receives the `ν/h²` injection.
    pub target: [usize; 2],
    pub owner: usize,
    pub owner_local: [usize; 2],
    /// Stopping group within the reading subdomain: one per side in 1D, one per edge in 2D.
    pub group: usize,
}

/// A physical boundary node adjacent to a subdomain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryNode {
    pub node: [usize; 2],
    pub target: [usize; 2],
}

/// Index box of one subdomain over global interior nodes (inclusive bounds).
#[derive(Debug, Clone, PartialEq)]
pub struct SubdomainBox {
    pub lo: [usize; 2],
    pub hi: [usize; 2],
    /// Nodes this subdomain owns when subdomain fields are assembled.
    pub core_lo: [usize; 2],
    pub core_hi: [usize; 2],
    pub reads: Vec<InterfaceRead>,
    pub boundary: Vec<BoundaryNode>,
}

impl SubdomainBox {
    pub fn shape(&self) -> [usize; 2] {
        [self.hi[0] - self.lo[0] + 1, self.hi[1] - self.lo[1] + 1]
    }

    pub fn contains(&self, node: [usize; 2]) -> bool {
        (0..2).all(|a| self.lo[a] <= node[a] && node[a] <= self.hi[a])
    }

    pub fn owns(&self, node: [usize; 2]) -> bool {
        (0..2).all(|a| self.core_lo[a] <= node[a] && node[a] <= self.core_hi[a])
    }

    pub fn local(&self, node: [usize; 2]) -> [usize; 2] {
        [node[0] - self.lo[0], node[1] - self.lo[1]]
    }

    pub fn groups(&self) -> usize {
        self.reads.iter().map(|r| r.group + 1).max().unwrap_or(0)
    }
}

/// Subdomain boxes plus the global interior shape they tile.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    pub dim: usize,
    /// Interior node counts; `shape[1] = 1` in 1D.
    pub shape: [usize; 2],
    pub boxes: Vec<SubdomainBox>,
}

impl Layout {
    /// The trivial one-subdomain layout.
    pub fn single(dim: usize, shape: [usize; 2]) -> Self {
        let axes = [
            AxisSplit::whole(shape[0]),
            AxisSplit::whole(if dim == 1 { 1 } else { shape[1] }),
        ];
        Self::from_axes(dim, shape, &axes)
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Index of the subdomain whose core contains `node`.
    pub fn owner_of(&self, node: [usize; 2]) -> Option<usize> {
        self.boxes.iter().position(|b| b.owns(node))
    }

    fn from_axes(dim: usize, shape: [usize; 2], axes: &[AxisSplit; 2]) -> Self {
        let (px, py) = (axes[0].parts(), axes[1].parts());
        let mut boxes = Vec::with_capacity(px * py);
        for i in 0..px {
            for j in 0..py {
                let lo = [axes[0].lo(i), axes[1].lo(j)];
                let hi = [axes[0].hi(i), axes[1].hi(j)];
                let core_lo = [axes[0].core_lo(i), axes[1].core_lo(j)];
                let core_hi = [axes[0].core_hi(i), axes[1].core_hi(j)];
                boxes.push(SubdomainBox {
                    lo,
                    hi,
                    core_lo,
                    core_hi,
                    reads: Vec::new(),
                    boundary: Vec::new(),
                });
            }
        }
        let mut layout = Layout { dim, shape, boxes };
        layout.wire(axes);
        layout
    }

    // Fills in reads and boundary nodes for every box.
    fn wire(&mut self, axes: &[AxisSplit; 2]) {
        let py = axes[1].parts();
        let dims = if self.dim == 1 { 1 } else { 2 };
        for s in 0..self.boxes.len() {
            let (lo, hi) = (self.boxes[s].lo, self.boxes[s].hi);
            let mut reads = Vec::new();
            let mut boundary = Vec::new();
            for axis in 0..dims {
                let other = 1 - axis;
                for (side, ring) in [(0, lo[axis] - 1), (1, hi[axis] + 1)] {
                    let target_axis = if side == 0 { lo[axis] } else { hi[axis] };
                    let group = 2 * axis + side;
                    let span = if dims == 1 { lo[1]..=hi[1] } else { lo[other]..=hi[other] };
                    for k in span {
                        let mut node = [0; 2];
                        node[axis] = ring;
                        node[other] = k;
                        let mut tnode = node;
                        tnode[axis] = target_axis;
                        let target = self.boxes[s].local(tnode);
                        let on_boundary = ring == 0 || ring == self.shape[axis] + 1;
                        if on_boundary {
                            boundary.push(BoundaryNode { node, target });
                        } else {
                            let i = axes[0].core_index(node[0]);
                            let j = axes[1].core_index(node[1]);
                            let owner = i * py + j;
                            let owner_local = self.boxes[owner].local(node);
                            reads.push(InterfaceRead {
                                node,
                                target,
                                owner,
                                owner_local,
                                group,
                            });
                        }
                    }
                }
            }
            // renumber groups densely within the box
            let mut seen: Vec<usize> = reads.iter().map(|r| r.group).collect();
            seen.sort_unstable();
            seen.dedup();
            for r in &mut reads {
                r.group = seen.iter().position(|&g| g == r.group).unwrap_or(0);
            }
            self.boxes[s].reads = reads;
            self.boxes[s].boundary = boundary;
        }
    }
}

// Split of one axis of `n` interior nodes into overlapping parts.
#[derive(Debug, Clone)]
struct AxisSplit {
    n: usize,
    breaks: Vec<usize>,
    left_ext: usize,
    right_ext: usize,
}

impl AxisSplit {
    fn whole(n: usize) -> Self {
        Self {
            n,
            breaks: vec![0, n + 1],
            left_ext: 0,
            right_ext: 0,
        }
    }

    fn new(n: usize, parts: usize, left_ext: usize, right_ext: usize, name: &str) -> Result<Self> {
        let breaks: Vec<usize> = (0..=parts)
            .map(|i| (2 * i * (n + 1) + parts) / (2 * parts))
            .collect();
        let split = Self {
            n,
            breaks,
            left_ext,
            right_ext,
        };
        split.validate(name)?;
        Ok(split)
    }

    fn validate(&self, name: &str) -> Result<()> {
        let p = self.parts();
        for i in 1..p {
            let interface = format!("{name}{i} (between subdomains {} and {})", i - 1, i);
            let b = self.breaks[i];
            if self.left_ext + self.right_ext < 2 {
                return Err(Error::InfeasibleOverlap {
                    interface,
                    reason: "overlap must contain at least one interior node (beta <= alpha)"
                        .into(),
                });
            }
            if b < self.left_ext + 2 || b + self.right_ext + 2 > self.n + 1 {
                return Err(Error::InfeasibleOverlap {
                    interface,
                    reason: "enlarged subdomain leaves the domain".into(),
                });
            }
        }
        for i in 1..p.saturating_sub(1) {
            let width = self.breaks[i + 1] - self.breaks[i];
            if width <= self.left_ext + self.right_ext {
                return Err(Error::InfeasibleOverlap {
                    interface: format!("{name}{} (between subdomains {} and {})", i + 1, i, i + 1),
                    reason: format!("overlaps swallow subdomain {i} of width {width}"),
                });
            }
        }
        Ok(())
    }

    fn parts(&self) -> usize {
        self.breaks.len() - 1
    }

    fn lo(&self, i: usize) -> usize {
        if i == 0 {
            1
        } else {
            self.breaks[i] - self.left_ext + 1
        }
    }

    fn hi(&self, i: usize) -> usize {
        if i + 1 == self.parts() {
            self.n
        } else {
            self.breaks[i + 1] + self.right_ext - 1
        }
    }

    fn core_lo(&self, i: usize) -> usize {
        self.breaks[i] + 1
    }

    fn core_hi(&self, i: usize) -> usize {
        (self.breaks[i + 1]).min(self.n)
    }

    fn core_index(&self, node: usize) -> usize {
        (0..self.parts())
            .find(|&i| self.core_lo(i) <= node && node <= self.core_hi(i))
            .unwrap_or(0)
    }
}

/// Interface pair `(N_α, N_β)` between consecutive 1D subdomains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterfacePair {
    pub n_alpha: usize,
    pub n_beta: usize,
    pub alpha: f64,
    pub beta: f64,
}

impl InterfacePair {
    /// `N_β − N_α`, the position of node `N_β` inside the right subdomain.
    pub fn offset(&self) -> usize {
        self.n_beta - self.n_alpha
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionLayout1D {
    pub grid: Grid1D,
    pub delta_cells: usize,
    pub interfaces: Vec<InterfacePair>,
    pub layout: Layout,
}

impl DecompositionLayout1D {
    /// Inclusive global index range of subdomain `i`.
    pub fn range(&self, i: usize) -> (usize, usize) {
        let b = &self.layout.boxes[i];
        (b.lo[0], b.hi[0])
    }
}

/// Splits `grid` into `p` equal non-overlapping parts and widens every
/// interior edge by `delta_cells` on both sides.
pub fn decompose_1d(grid: &Grid1D, p: usize, delta_cells: usize) -> Result<DecompositionLayout1D> {
    if p == 0 {
        return Err(invalid("p", "need at least one subdomain"));
    }
    let n = grid.n;
    let layout = if p == 1 {
        Layout::single(1, [n, 1])
    } else {
        let axis = AxisSplit::new(n, p, delta_cells, delta_cells, "x")?;
        Layout::from_axes(1, [n, 1], &[axis, AxisSplit::whole(1)])
    };
    let interfaces = (1..p)
        .map(|i| {
            let n_alpha = layout.boxes[i].lo[0] - 1;
            let n_beta = layout.boxes[i - 1].hi[0] + 1;
            InterfacePair {
                n_alpha,
                n_beta,
                alpha: n_alpha as f64 / (n + 1) as f64,
                beta: n_beta as f64 / (n + 1) as f64,
            }
        })
        .collect();
    Ok(DecompositionLayout1D {
        grid: *grid,
        delta_cells,
        interfaces,
        layout,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionLayout2D {
    pub overlap_cells: usize,
    pub convention: OverlapConvention,
    pub parts: [usize; 2],
    pub layout: Layout,
}

/// `px × py` overlapping rectangles over an `nx × ny` interior grid.
pub fn decompose_2d(
    nx: usize,
    ny: usize,
    px: usize,
    py: usize,
    overlap_cells: usize,
    convention: OverlapConvention,
) -> Result<DecompositionLayout2D> {
    if px == 0 || py == 0 {
        return Err(invalid("subdomains", "need at least one subdomain per direction"));
    }
    if nx < 3 || ny < 3 {
        return Err(invalid("n", "need at least 3 interior points per direction"));
    }
    let (le, re) = convention.extensions(overlap_cells);
    let split = |n: usize, p: usize, name: &str| -> Result<AxisSplit> {
        if p == 1 {
            Ok(AxisSplit::whole(n))
        } else {
            AxisSplit::new(n, p, le, re, name)
        }
    };
    let axes = [split(nx, px, "x")?, split(ny, py, "y")?];
    Ok(DecompositionLayout2D {
        overlap_cells,
        convention,
        parts: [px, py],
        layout: Layout::from_axes(2, [nx, ny], &axes),
    })
}
