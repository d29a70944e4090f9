//! The open bin's frontier and the gap/wastage geometry of the packing stage.
//!
//! A [`Skyline`] is the staircase-shaped upper boundary of everything placed
//! (or written off) so far, stored as maximal horizontal segments. The packing
//! stage only ever works at the *current position*: the lowest, then leftmost,
//! point of the frontier. Holes below the skyline are never reused.

/// One maximal horizontal run of the frontier: `[start, end)` at `height`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub start: i64,
    pub end: i64,
    pub height: i64,
}

impl Segment {
    pub fn width(&self) -> i64 {
        self.end - self.start
    }
}

/// The bottom-leftmost frontier point together with its two gaps.
///
/// `hgap` runs from the position to the next taller obstruction (or the right
/// bin border); `vgap` to the bin ceiling. The *current gap* is the smaller of
/// the two; a tie counts as horizontal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GapInfo {
    pub x: i64,
    pub y: i64,
    pub hgap: i64,
    pub vgap: i64,
}

impl GapInfo {
    pub fn current_gap(&self) -> i64 {
        self.hgap.min(self.vgap)
    }

    pub fn is_horizontal(&self) -> bool {
        self.hgap <= self.vgap
    }
}

/// The frontier of one open bin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skyline {
    bin_width: i64,
    bin_height: i64,
    segments: Vec<Segment>,
}

impl Skyline {
    /// An empty bin: a single segment at height 0.
    ///
    /// Panics if either dimension is smaller than 1.
    pub fn new(bin_width: i64, bin_height: i64) -> Self {
        assert!(
            bin_width >= 1 && bin_height >= 1,
            "bin dimensions must be at least 1x1, got {bin_width}x{bin_height}"
        );
        Self {
            bin_width,
            bin_height,
            segments: vec![Segment {
                start: 0,
                end: bin_width,
                height: 0,
            }],
        }
    }

    pub fn bin_width(&self) -> i64 {
        self.bin_width
    }

    pub fn bin_height(&self) -> i64 {
        self.bin_height
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Index of the lowest, then leftmost, segment.
    fn current_index(&self) -> usize {
        let mut best = 0;
        for (i, seg) in self.segments.iter().enumerate() {
            if seg.height < self.segments[best].height {
                best = i;
            }
        }
        best
    }

    /// The current position and its gaps, or `None` once the frontier has
    /// reached the ceiling everywhere (the bin is full).
    pub fn current_position(&self) -> Option<GapInfo> {
        let seg = self.segments[self.current_index()];
        if seg.height == self.bin_height {
            return None;
        }
        Some(GapInfo {
            x: seg.start,
            y: seg.height,
            hgap: seg.width(),
            vgap: self.bin_height - seg.height,
        })
    }

    pub fn is_full(&self) -> bool {
        self.current_position().is_none()
    }

    /// True iff an `width x height` item fits at the current position.
    pub fn fits_at_current(&self, width: i64, height: i64) -> bool {
        match self.current_position() {
            Some(gap) => width <= gap.hgap && gap.y + height <= self.bin_height,
            None => false,
        }
    }

    /// Places an item with its bottom-left corner at the current position and
    /// returns that position.
    ///
    /// Panics unless `fits_at_current(width, height)` holds; callers check the
    /// fit first.
    pub fn place_at_current(&mut self, width: i64, height: i64) -> (i64, i64) {
        assert!(
            self.fits_at_current(width, height),
            "item {width}x{height} does not fit at the current position"
        );
        let idx = self.current_index();
        let seg = self.segments[idx];
        let raised = Segment {
            start: seg.start,
            end: seg.start + width,
            height: seg.height + height,
        };
        if width == seg.width() {
            self.segments[idx] = raised;
        } else {
            self.segments[idx] = Segment {
                start: seg.start + width,
                end: seg.end,
                height: seg.height,
            };
            self.segments.insert(idx, raised);
        }
        self.merge();
        (seg.start, seg.height)
    }

    /// Writes off the area at the current position that no item can use.
    ///
    /// The wastage rectangle spans the horizontal gap and rises to the top of
    /// the lower neighboring run, or to the bin ceiling if the segment has no
    /// neighbors. Returns the rectangle as `(x, y, width, height)`.
    ///
    /// Panics if the bin is already full.
    pub fn declare_wastage(&mut self) -> (i64, i64, i64, i64) {
        assert!(!self.is_full(), "declare_wastage on a full bin");
        let idx = self.current_index();
        let seg = self.segments[idx];
        let left = idx.checked_sub(1).map(|i| self.segments[i].height);
        let right = self.segments.get(idx + 1).map(|s| s.height);
        let target = match (left, right) {
            (Some(l), Some(r)) => l.min(r),
            (Some(l), None) => l,
            (None, Some(r)) => r,
            (None, None) => self.bin_height,
        };
        debug_assert!(target > seg.height, "neighbors are strictly higher");
        let rect = (seg.start, seg.height, seg.width(), target - seg.height);
        self.segments[idx].height = target;
        self.merge();
        rect
    }

    /// Total area below the frontier; equals placed item area plus declared
    /// wastage area.
    pub fn area_under(&self) -> i64 {
        self.segments.iter().map(|s| s.width() * s.height).sum()
    }

    fn merge(&mut self) {
        let mut i = 0;
        while i + 1 < self.segments.len() {
            if self.segments[i].height == self.segments[i + 1].height {
                self.segments[i].end = self.segments[i + 1].end;
                self.segments.remove(i + 1);
            } else {
                i += 1;
            }
        }
    }
}
