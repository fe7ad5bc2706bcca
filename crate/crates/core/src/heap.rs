//! The two heap flavors the normalizers need: a plain binary heap whose
//! top can be re-keyed in place (the one-direction loops only ever touch
//! the top), and a symbol-indexed heap with decrease/increase-key for the
//! bidirectional exchange phase.
//!
//! Both take the priority as a `better(a, b)` predicate meaning "`a` pops
//! before `b`", so the same code serves min- and max-heaps under either
//! comparator mode.

/// Non-indexed binary heap.
pub(crate) struct SimpleHeap<T, F: Fn(&T, &T) -> bool> {
    items: Vec<T>,
    better: F,
}

impl<T, F: Fn(&T, &T) -> bool> SimpleHeap<T, F> {
    /// Floyd heap construction, O(n).
    pub(crate) fn build(items: Vec<T>, better: F) -> Self {
        let mut heap = SimpleHeap { items, better };
        if heap.items.len() > 1 {
            for i in (0..heap.items.len() / 2).rev() {
                heap.sift_down(i);
            }
        }
        heap
    }

    pub(crate) fn peek(&self) -> Option<&T> {
        self.items.first()
    }

    pub(crate) fn pop(&mut self) -> Option<T> {
        if self.items.is_empty() {
            return None;
        }
        let last = self.items.len() - 1;
        self.items.swap(0, last);
        let top = self.items.pop();
        if !self.items.is_empty() {
            self.sift_down(0);
        }
        top
    }

    /// Replace the top key and restore heap order; the one-direction loops
    /// only ever pop the top, mutate its key, and re-sift down.
    pub(crate) fn update_top(&mut self, item: T) {
        debug_assert!(!self.items.is_empty());
        self.items[0] = item;
        self.sift_down(0);
    }

    fn sift_down(&mut self, mut i: usize) {
        let n = self.items.len();
        loop {
            let l = 2 * i + 1;
            let r = l + 1;
            let mut best = i;
            if l < n && (self.better)(&self.items[l], &self.items[best]) {
                best = l;
            }
            if r < n && (self.better)(&self.items[r], &self.items[best]) {
                best = r;
            }
            if best == i {
                break;
            }
            self.items.swap(i, best);
            i = best;
        }
    }
}

/// Binary heap indexed by a dense key (the alphabet slot), supporting
/// update and removal of arbitrary entries.
pub(crate) struct IndexedHeap<T, F: Fn(&T, &T) -> bool> {
    items: Vec<(usize, T)>,
    /// slot -> heap position, `usize::MAX` when absent.
    pos: Vec<usize>,
    better: F,
}

const ABSENT: usize = usize::MAX;

impl<T, F: Fn(&T, &T) -> bool> IndexedHeap<T, F> {
    pub(crate) fn build(slots: usize, entries: Vec<(usize, T)>, better: F) -> Self {
        let mut heap = IndexedHeap {
            items: entries,
            pos: vec![ABSENT; slots],
            better,
        };
        for (i, (slot, _)) in heap.items.iter().enumerate() {
            heap.pos[*slot] = i;
        }
        if heap.items.len() > 1 {
            for i in (0..heap.items.len() / 2).rev() {
                heap.sift_down(i);
            }
        }
        heap
    }

    pub(crate) fn peek(&self) -> Option<&(usize, T)> {
        self.items.first()
    }

    pub(crate) fn contains(&self, slot: usize) -> bool {
        self.pos[slot] != ABSENT
    }

    pub(crate) fn insert(&mut self, slot: usize, item: T) {
        debug_assert!(!self.contains(slot));
        self.items.push((slot, item));
        let i = self.items.len() - 1;
        self.pos[slot] = i;
        self.sift_up(i);
    }

    /// Re-key an existing entry, sifting whichever way it moved.
    pub(crate) fn update(&mut self, slot: usize, item: T) {
        let i = self.pos[slot];
        debug_assert!(i != ABSENT);
        self.items[i].1 = item;
        self.sift_up(i);
        self.sift_down(self.pos[slot]);
    }

    pub(crate) fn remove(&mut self, slot: usize) -> Option<T> {
        let i = self.pos[slot];
        if i == ABSENT {
            return None;
        }
        let last = self.items.len() - 1;
        self.swap(i, last);
        let (_, item) = self.items.pop().expect("non-empty");
        self.pos[slot] = ABSENT;
        if i < self.items.len() {
            let moved = self.items[i].0;
            self.sift_up(i);
            self.sift_down(self.pos[moved]);
        }
        Some(item)
    }

    fn swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.items.swap(a, b);
        self.pos[self.items[a].0] = a;
        self.pos[self.items[b].0] = b;
    }

    fn sift_up(&mut self, mut i: usize) {
        while i > 0 {
            let parent = (i - 1) / 2;
            if (self.better)(&self.items[i].1, &self.items[parent].1) {
                self.swap(i, parent);
                i = parent;
            } else {
                break;
            }
        }
    }

    fn sift_down(&mut self, mut i: usize) {
        let n = self.items.len();
        loop {
            let l = 2 * i + 1;
            let r = l + 1;
            let mut best = i;
            if l < n && (self.better)(&self.items[l].1, &self.items[best].1) {
                best = l;
            }
            if r < n && (self.better)(&self.items[r].1, &self.items[best].1) {
                best = r;
            }
            if best == i {
                break;
            }
            self.swap(i, best);
            i = best;
        }
    }
}
