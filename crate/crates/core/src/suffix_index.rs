//! Suffix tree of `x$` annotated with word-depth and occurrence counts.
//!
//! The tree is built online (Ukkonen) over the text followed by a sentinel
//! byte that is not part of any [`Alphabet`], so every suffix ends at a leaf.
//! Nodes live in parallel arrays indexed by [`NodeId`]; children form a
//! singly linked sibling list kept sorted by the first symbol of their edge,
//! which makes every traversal follow the alphabet order.
//!
//! After construction each node `v` carries
//!
//! * `depth(v)`: length of its path-label `L(v)`,
//! * `count(v)`: number of suffixes of `x` in its subtree, which is the number
//!   of occurrences of `L(v)` in `x`. The sentinel-only suffix counts 0, so the
//!   root counts `n`.
//!
//! A position inside an edge (an implicit node) is addressed by a [`Locus`].

use std::mem::size_of;

use crate::error::{Error, Result};
use crate::sequence::{Alphabet, Sequence};

/// End-of-text marker appended to the indexed text. Never a member of an
/// [`Alphabet`], and it sorts before every alphabet symbol.
pub const SENTINEL: u8 = 0;

const NIL: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    pub const ROOT: NodeId = NodeId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A position in the tree: `offset` symbols down the incoming edge of `node`.
///
/// `offset == edge length` means the locus is `node` itself; the empty word is
/// the root with offset 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Locus {
    node: NodeId,
    offset: u32,
}

impl Locus {
    pub fn root() -> Self {
        Locus {
            node: NodeId::ROOT,
            offset: 0,
        }
    }

    /// Nearest explicit node at or below the locus.
    pub fn node(&self) -> NodeId {
        self.node
    }

    pub fn offset(&self) -> usize {
        self.offset as usize
    }
}

#[derive(Clone, Copy, Debug)]
struct Node {
    // incoming edge is text[start..end]
    start: u32,
    end: u32,
    link: u32,
    first_child: u32,
    next_sibling: u32,
    depth: u32,
    count: u32,
    head: u8,
}

impl Node {
    fn new(start: u32, end: u32, head: u8) -> Self {
        Node {
            start,
            end,
            link: NIL,
            first_child: NIL,
            next_sibling: NIL,
            depth: 0,
            count: 0,
            head,
        }
    }
}

pub struct SuffixIndex {
    /// `x` followed by [`SENTINEL`].
    text: Vec<u8>,
    alphabet: Alphabet,
    nodes: Vec<Node>,
}

impl SuffixIndex {
    /// Longest text accepted; positions and counts are stored as `u32`.
    pub const MAX_LEN: usize = (u32::MAX - 2) as usize;

    pub fn build(seq: &Sequence) -> Result<Self> {
        let n = seq.len();
        if n == 0 {
            return Err(Error::EmptySequence);
        }
        if n > Self::MAX_LEN {
            return Err(Error::SequenceTooLong {
                len: n,
                max: Self::MAX_LEN,
            });
        }
        let mut text = Vec::with_capacity(n + 1);
        text.extend_from_slice(seq.data());
        text.push(SENTINEL);

        let mut builder = Builder::new(text);
        builder.run();
        Ok(builder.finish(seq.alphabet().clone()))
    }

    /// Length `n` of the indexed text, sentinel excluded.
    pub fn len(&self) -> usize {
        self.text.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The indexed text without the sentinel.
    pub fn text(&self) -> &[u8] {
        &self.text[..self.len()]
    }

    pub(crate) fn text_with_sentinel(&self) -> &[u8] {
        &self.text
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn root(&self) -> NodeId {
        NodeId::ROOT
    }

    /// Number of explicit nodes, the root and the sentinel-only leaf included.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.node_count() as u32).map(NodeId)
    }

    #[inline]
    pub fn depth(&self, v: NodeId) -> usize {
        self.nodes[v.index()].depth as usize
    }

    /// Occurrences of `L(v)` in the text.
    #[inline]
    pub fn count(&self, v: NodeId) -> usize {
        self.nodes[v.index()].count as usize
    }

    /// Half-open range of the text labelling the edge into `v`.
    #[inline]
    pub fn edge(&self, v: NodeId) -> (usize, usize) {
        (self.nodes[v.index()].start as usize, self.nodes[v.index()].end as usize)
    }

    #[inline]
    pub fn edge_len(&self, v: NodeId) -> usize {
        (self.nodes[v.index()].end - self.nodes[v.index()].start) as usize
    }

    /// First symbol of the edge into `v` (the key under which its parent stores it).
    #[inline]
    pub fn head(&self, v: NodeId) -> u8 {
        self.nodes[v.index()].head
    }

    #[inline]
    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.nodes[v.index()].first_child == NIL
    }

    /// Start position of the suffix spelled by a leaf.
    pub fn leaf_label(&self, v: NodeId) -> Option<usize> {
        self.is_leaf(v)
            .then(|| self.nodes[v.index()].end as usize - self.depth(v))
    }

    /// Path-label `L(v)`; it ends with the sentinel for leaves.
    pub fn path_label(&self, v: NodeId) -> &[u8] {
        let end = self.nodes[v.index()].end as usize;
        &self.text[end - self.depth(v)..end]
    }

    pub fn children(&self, v: NodeId) -> Children<'_> {
        Children {
            index: self,
            next: self.nodes[v.index()].first_child,
        }
    }

    #[inline]
    pub fn next_sibling_of(&self, v: NodeId) -> Option<NodeId> {
        match self.nodes[v.index()].next_sibling {
            NIL => None,
            s => Some(NodeId(s)),
        }
    }

    #[inline]
    pub fn find_child(&self, v: NodeId, symbol: u8) -> Option<NodeId> {
        let mut c = self.nodes[v.index()].first_child;
        while c != NIL {
            let h = self.nodes[c as usize].head;
            if h == symbol {
                return Some(NodeId(c));
            }
            if h > symbol {
                break;
            }
            c = self.nodes[c as usize].next_sibling;
        }
        None
    }

    /// Node path-labelled `L(v)` without its first symbol.
    pub fn suffix_link_of(&self, v: NodeId) -> Result<NodeId> {
        if v == NodeId::ROOT || self.is_leaf(v) {
            return Err(Error::NoSuffixLink(v.index()));
        }
        match self.nodes[v.index()].link {
            NIL => Err(Error::NoSuffixLink(v.index())),
            l => Ok(NodeId(l)),
        }
    }

    /// Locus spelling `x[i..=j]`, found by a skip/count descent from the root
    /// in time proportional to the number of edges on the path.
    pub fn locate_factor(&self, i: usize, j: usize) -> Result<Locus> {
        let n = self.len();
        if i > j || j >= n {
            return Err(Error::FactorOutOfRange {
                start: i,
                end: j,
                len: n,
            });
        }
        let mut node = NodeId::ROOT;
        let mut pos = i;
        let mut remaining = j - i + 1;
        loop {
            let child = self
                .find_child(node, self.text[pos])
                .ok_or_else(|| Error::Consistency(format!("factor [{i}, {j}] has no path in the tree")))?;
            let len = self.edge_len(child);
            if remaining <= len {
                return Ok(Locus {
                    node: child,
                    offset: remaining as u32,
                });
            }
            node = child;
            pos += len;
            remaining -= len;
        }
    }

    /// Locus spelling `word`, if it occurs in the text.
    pub fn locate_word(&self, word: &[u8]) -> Option<Locus> {
        let mut locus = Locus::root();
        for &a in word {
            locus = self.child(locus, a)?;
        }
        Some(locus)
    }

    /// Occurrences of the word spelled by `locus`. An implicit locus shares the
    /// count of the node below it.
    #[inline]
    pub fn frequency(&self, locus: Locus) -> usize {
        self.count(locus.node)
    }

    #[inline]
    pub fn is_explicit(&self, locus: Locus) -> bool {
        locus.offset as usize == self.edge_len(locus.node)
    }

    /// Length of the word spelled by `locus`.
    pub fn locus_depth(&self, locus: Locus) -> usize {
        self.depth(locus.node) - (self.edge_len(locus.node) - locus.offset as usize)
    }

    pub fn locus_label(&self, locus: Locus) -> &[u8] {
        let end = self.nodes[locus.node.index()].start as usize + locus.offset as usize;
        &self.text[end - self.locus_depth(locus)..end]
    }

    /// Extends `locus` by one symbol.
    #[inline]
    pub fn child(&self, locus: Locus, symbol: u8) -> Option<Locus> {
        let v = locus.node.index();
        let len = self.nodes[v].end - self.nodes[v].start;
        if locus.offset < len {
            (self.text[(self.nodes[v].start + locus.offset) as usize] == symbol).then_some(Locus {
                node: locus.node,
                offset: locus.offset + 1,
            })
        } else {
            self.find_child(locus.node, symbol)
                .map(|c| Locus { node: c, offset: 1 })
        }
    }

    /// Heap bytes held by the index.
    pub fn heap_bytes(&self) -> usize {
        self.text.capacity() + self.nodes.capacity() * size_of::<Node>()
    }
}

pub struct Children<'a> {
    index: &'a SuffixIndex,
    next: u32,
}

impl Iterator for Children<'_> {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        if self.next == NIL {
            return None;
        }
        let c = self.next;
        self.next = self.index.nodes[c as usize].next_sibling;
        Some(NodeId(c))
    }
}

struct Builder {
    text: Vec<u8>,
    nodes: Vec<Node>,
}

#[cfg(target_os = "linux")]
fn advise_huge_pages<T>(buf: &Vec<T>) {
    const HUGE: usize = 2 << 20;
    let bytes = buf.capacity() * size_of::<T>();
    let begin = (buf.as_ptr() as usize).next_multiple_of(HUGE);
    let end = (buf.as_ptr() as usize + bytes) & !(HUGE - 1);
    if end > begin {
        // SAFETY: the range lies inside the vector's allocation; the call only sets a paging hint.
        unsafe {
            libc::madvise(begin as *mut libc::c_void, end - begin, libc::MADV_HUGEPAGE);
        }
    }
}

#[cfg(not(target_os = "linux"))]
fn advise_huge_pages<T>(_: &Vec<T>) {}

// Leaf edges grow with the text until construction finishes.
const OPEN: u32 = u32::MAX;

impl Builder {
    fn new(text: Vec<u8>) -> Self {
        let mut nodes = Vec::with_capacity(2 * text.len());
        advise_huge_pages(&nodes);
        nodes.push(Node::new(0, 0, SENTINEL));
        Builder { text, nodes }
    }

    fn new_node(&mut self, start: u32, end: u32, head: u8) -> u32 {
        let id = self.nodes.len() as u32;
        self.nodes.push(Node::new(start, end, head));
        id
    }

    #[inline]
    fn find_child(&self, v: u32, symbol: u8) -> u32 {
        let mut c = self.nodes[v as usize].first_child;
        while c != NIL {
            let node = &self.nodes[c as usize];
            if node.head == symbol {
                return c;
            }
            if node.head > symbol {
                return NIL;
            }
            c = node.next_sibling;
        }
        NIL
    }

    fn insert_child(&mut self, parent: u32, child: u32) {
        let h = self.nodes[child as usize].head;
        let mut prev = NIL;
        let mut c = self.nodes[parent as usize].first_child;
        while c != NIL && self.nodes[c as usize].head < h {
            prev = c;
            c = self.nodes[c as usize].next_sibling;
        }
        self.nodes[child as usize].next_sibling = c;
        if prev == NIL {
            self.nodes[parent as usize].first_child = child;
        } else {
            self.nodes[prev as usize].next_sibling = child;
        }
    }

    fn replace_child(&mut self, parent: u32, old: u32, new: u32) {
        self.nodes[new as usize].next_sibling = self.nodes[old as usize].next_sibling;
        self.nodes[old as usize].next_sibling = NIL;
        if self.nodes[parent as usize].first_child == old {
            self.nodes[parent as usize].first_child = new;
            return;
        }
        let mut c = self.nodes[parent as usize].first_child;
        while self.nodes[c as usize].next_sibling != old {
            c = self.nodes[c as usize].next_sibling;
        }
        self.nodes[c as usize].next_sibling = new;
    }

    #[inline]
    fn edge_len(&self, v: u32, pos: usize) -> usize {
        let node = &self.nodes[v as usize];
        let end = match node.end {
            OPEN => pos as u32 + 1,
            e => e,
        };
        (end - node.start) as usize
    }

    fn run(&mut self) {
        const ROOT: u32 = 0;
        let mut active_node = ROOT;
        let mut active_edge = 0usize;
        let mut active_len = 0usize;
        let mut remainder = 0usize;

        for pos in 0..self.text.len() {
            let symbol = self.text[pos];
            remainder += 1;
            let mut pending_link = NIL;

            while remainder > 0 {
                if active_len == 0 {
                    active_edge = pos;
                }
                let next = self.find_child(active_node, self.text[active_edge]);
                if next == NIL {
                    let leaf = self.new_node(pos as u32, OPEN, symbol);
                    self.insert_child(active_node, leaf);
                    if pending_link != NIL {
                        self.nodes[pending_link as usize].link = active_node;
                        pending_link = NIL;
                    }
                } else {
                    let len = self.edge_len(next, pos);
                    if active_len >= len {
                        active_edge += len;
                        active_len -= len;
                        active_node = next;
                        continue;
                    }
                    let edge_start = self.nodes[next as usize].start as usize;
                    if self.text[edge_start + active_len] == symbol {
                        if pending_link != NIL && active_node != ROOT {
                            self.nodes[pending_link as usize].link = active_node;
                        }
                        active_len += 1;
                        break;
                    }
                    let split_at = (edge_start + active_len) as u32;
                    let split = self.new_node(edge_start as u32, split_at, self.text[edge_start]);
                    self.nodes[split as usize].link = ROOT;
                    self.replace_child(active_node, next, split);
                    self.nodes[next as usize].start = split_at;
                    self.nodes[next as usize].head = self.text[split_at as usize];
                    self.insert_child(split, next);
                    let leaf = self.new_node(pos as u32, OPEN, symbol);
                    self.insert_child(split, leaf);
                    if pending_link != NIL {
                        self.nodes[pending_link as usize].link = split;
                    }
                    pending_link = split;
                }
                remainder -= 1;
                if active_node == ROOT && active_len > 0 {
                    active_len -= 1;
                    active_edge = pos + 1 - remainder;
                } else if active_node != ROOT {
                    active_node = match self.nodes[active_node as usize].link {
                        NIL => ROOT,
                        l => l,
                    };
                }
            }
        }
    }

    fn finish(self, alphabet: Alphabet) -> SuffixIndex {
        let Builder { text, mut nodes } = self;
        let total = text.len() as u32;
        let n = text.len() - 1;
        for node in nodes.iter_mut() {
            if node.end == OPEN {
                node.end = total;
            }
        }

        let mut order = Vec::with_capacity(nodes.len());
        let mut stack = vec![0u32];
        while let Some(v) = stack.pop() {
            order.push(v);
            let depth = nodes[v as usize].depth;
            let mut c = nodes[v as usize].first_child;
            while c != NIL {
                let child = &mut nodes[c as usize];
                child.depth = depth + child.end - child.start;
                stack.push(c);
                c = child.next_sibling;
            }
        }
        drop(stack);

        for &v in order.iter().rev() {
            let v = v as usize;
            let mut c = nodes[v].first_child;
            if c == NIL {
                let suffix = nodes[v].end - nodes[v].depth;
                nodes[v].count = u32::from(suffix as usize != n);
                continue;
            }
            let mut total = 0;
            while c != NIL {
                total += nodes[c as usize].count;
                c = nodes[c as usize].next_sibling;
            }
            nodes[v].count = total;
        }
        drop(order);
        nodes.shrink_to_fit();

        SuffixIndex { text, alphabet, nodes }
    }
}
