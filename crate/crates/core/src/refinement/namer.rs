//! Color naming strategies for the refinement engine.
//!
//! The engine never inspects colors; it only asks a [`Namer`] to name new
//! values built from old ones. Three strategies share the same interface:
//!
//! * [`DigestNamer`] hashes each value's canonical encoding (children written
//!   as digests). Names are stable across graphs and processes.
//! * [`ExactNamer`] interns values into dense integers. Names are only
//!   comparable within one namer, but equal names are equal values with no
//!   hashing involved; all verdict functions use it.
//! * [`FullNamer`] keeps every value's complete canonical encoding. It is
//!   exponential in the refinement depth and exists to confirm digest
//!   equalities on small inputs.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::code::{CanonicalCode, Digest, Encoder, TAG_MULTISET};

pub trait Namer {
    type Color: Copy + Eq + Hash + Debug;

    /// Names a value given by its canonical encoding.
    fn leaf(&mut self, bytes: &[u8]) -> Self::Color;
    /// Names `(seed, {{members}})`. The slice may be reordered.
    fn half(&mut self, seed: Self::Color, members: &mut [Self::Color]) -> Self::Color;
    /// Names `(prev, {{(a, b)}})`. The slice may be reordered.
    fn round(&mut self, prev: Self::Color, members: &mut [(Self::Color, Self::Color)]) -> Self::Color;
    /// Writes a color as a child value.
    fn write(&self, c: Self::Color, enc: &mut Encoder);
    /// A total order on colors consistent with the namer's multiset encoding.
    fn order(&self, a: &Self::Color, b: &Self::Color) -> Ordering;

    /// Encodes the multiset of `colors`.
    fn multiset_code(&self, colors: &[Self::Color]) -> CanonicalCode {
        let mut sorted = colors.to_vec();
        sorted.sort_by(|a, b| self.order(a, b));
        let mut enc = Encoder::new();
        enc.open(TAG_MULTISET);
        for &c in &sorted {
            self.write(c, &mut enc);
        }
        enc.close();
        enc.into_code()
    }
}

/// Names values by the SHA-256 digest of their canonical encoding.
#[derive(Default, Clone, Debug)]
pub struct DigestNamer {
    enc: Encoder,
}

impl Namer for DigestNamer {
    type Color = Digest;

    fn leaf(&mut self, bytes: &[u8]) -> Digest {
        Digest::of(bytes)
    }

    fn half(&mut self, seed: Digest, members: &mut [Digest]) -> Digest {
        self.enc.clear();
        self.enc.open_tuple();
        self.enc.digest(&seed);
        self.enc.multiset_of_digests(members);
        self.enc.close();
        Digest::of(self.enc.bytes())
    }

    fn round(&mut self, prev: Digest, members: &mut [(Digest, Digest)]) -> Digest {
        self.enc.clear();
        self.enc.open_tuple();
        self.enc.digest(&prev);
        self.enc.multiset_of_digest_pairs(members);
        self.enc.close();
        Digest::of(self.enc.bytes())
    }

    fn write(&self, c: Digest, enc: &mut Encoder) {
        enc.digest(&c);
    }

    fn order(&self, a: &Digest, b: &Digest) -> Ordering {
        a.cmp(b)
    }
}

/// Interns values into dense integers shared by every graph refined with
/// the same namer.
#[derive(Default, Clone, Debug)]
pub struct ExactNamer {
    leaves: HashMap<Vec<u8>, u32>,
    halves: HashMap<(u32, Vec<u32>), u32>,
    rounds: HashMap<(u32, Vec<(u32, u32)>), u32>,
    next: u32,
}

impl ExactNamer {
    pub fn new() -> Self {
        Self::default()
    }

    fn fresh(&mut self) -> u32 {
        let id = self.next;
        self.next = self.next.checked_add(1).expect("color space exhausted");
        id
    }

    /// Number of distinct values named so far.
    pub fn len(&self) -> usize {
        self.next as usize
    }

    pub fn is_empty(&self) -> bool {
        self.next == 0
    }
}

impl Namer for ExactNamer {
    type Color = u32;

    fn leaf(&mut self, bytes: &[u8]) -> u32 {
        if let Some(&id) = self.leaves.get(bytes) {
            return id;
        }
        let id = self.fresh();
        self.leaves.insert(bytes.to_vec(), id);
        id
    }

    fn half(&mut self, seed: u32, members: &mut [u32]) -> u32 {
        members.sort_unstable();
        let key = (seed, members.to_vec());
        if let Some(&id) = self.halves.get(&key) {
            return id;
        }
        let id = self.fresh();
        self.halves.insert(key, id);
        id
    }

    fn round(&mut self, prev: u32, members: &mut [(u32, u32)]) -> u32 {
        members.sort_unstable();
        let key = (prev, members.to_vec());
        if let Some(&id) = self.rounds.get(&key) {
            return id;
        }
        let id = self.fresh();
        self.rounds.insert(key, id);
        id
    }

    fn write(&self, c: u32, enc: &mut Encoder) {
        enc.uint(c as u128);
    }

    fn order(&self, a: &u32, b: &u32) -> Ordering {
        a.cmp(b)
    }
}

/// Keeps the full canonical encoding of every value. Colors index an arena
/// of encodings; identical encodings share one index.
#[derive(Default, Clone, Debug)]
pub struct FullNamer {
    arena: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, u32>,
}

impl FullNamer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn code(&self, c: u32) -> CanonicalCode {
        CanonicalCode::from_bytes(self.arena[c as usize].clone())
    }

    fn intern(&mut self, bytes: Vec<u8>) -> u32 {
        if let Some(&id) = self.index.get(&bytes) {
            return id;
        }
        let id = self.arena.len() as u32;
        self.arena.push(bytes.clone());
        self.index.insert(bytes, id);
        id
    }

    fn bytes(&self, c: u32) -> &[u8] {
        &self.arena[c as usize]
    }
}

impl Namer for FullNamer {
    type Color = u32;

    fn leaf(&mut self, bytes: &[u8]) -> u32 {
        self.intern(bytes.to_vec())
    }

    fn half(&mut self, seed: u32, members: &mut [u32]) -> u32 {
        let mut enc = Encoder::new();
        enc.open_tuple();
        enc.raw(self.bytes(seed));
        let mut parts: Vec<&[u8]> = members.iter().map(|&m| self.bytes(m)).collect();
        enc.multiset_of(&mut parts);
        enc.close();
        self.intern(enc.into_code().as_bytes().to_vec())
    }

    fn round(&mut self, prev: u32, members: &mut [(u32, u32)]) -> u32 {
        let mut enc = Encoder::new();
        enc.open_tuple();
        enc.raw(self.bytes(prev));
        let mut parts: Vec<Vec<u8>> = members
            .iter()
            .map(|&(a, b)| {
                let mut t = Encoder::new();
                t.open_tuple();
                t.raw(self.bytes(a));
                t.raw(self.bytes(b));
                t.close();
                t.into_code().as_bytes().to_vec()
            })
            .collect();
        enc.multiset_of(&mut parts);
        enc.close();
        self.intern(enc.into_code().as_bytes().to_vec())
    }

    fn write(&self, c: u32, enc: &mut Encoder) {
        enc.raw(self.bytes(c));
    }

    fn order(&self, a: &u32, b: &u32) -> Ordering {
        self.bytes(*a).cmp(self.bytes(*b))
    }
}
