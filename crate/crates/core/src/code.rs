//! Canonical, order-independent encoding of nested color values.
//!
//! Every value is written as `tag (1 byte) | payload length (u32, big endian) | payload`.
//! Tuples concatenate their members in order; multisets concatenate the
//! member encodings after sorting them lexicographically, so the result does
//! not depend on insertion order. The framing is self-delimiting, which makes
//! the encoding injective: equal bytes means equal abstract values.
//!
//! Long histories are compressed with SHA-256 digests ([`Digest`]). A digest
//! is itself a value with its own tag, so a code that contains digests is
//! still a well-defined canonical encoding of "the value whose children hash
//! to these digests".

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use serde::{Deserialize, Serialize};
use sha2::{Digest as _, Sha256};

pub const TAG_UINT: u8 = 0x01;
pub const TAG_NEG: u8 = 0x02;
pub const TAG_SYMBOL: u8 = 0x03;
pub const TAG_TUPLE: u8 = 0x10;
pub const TAG_MULTISET: u8 = 0x11;
pub const TAG_DIGEST: u8 = 0x20;

/// A 256-bit digest of a [`CanonicalCode`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Digest(pub [u8; 32]);

impl Digest {
    pub fn of(bytes: &[u8]) -> Digest {
        let out = Sha256::digest(bytes);
        let mut d = [0u8; 32];
        d.copy_from_slice(&out);
        Digest(d)
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }
}

impl fmt::Debug for Digest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digest({})", &self.to_hex()[..16])
    }
}

/// Streaming writer for the canonical encoding.
///
/// Composite values are opened with [`Encoder::open`] and closed with
/// [`Encoder::close`], which back-patches the length field.
#[derive(Default, Clone, Debug)]
pub struct Encoder {
    buf: Vec<u8>,
    open: Vec<usize>,
}

impl Encoder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn clear(&mut self) {
        self.buf.clear();
        self.open.clear();
    }

    pub fn bytes(&self) -> &[u8] {
        debug_assert!(self.open.is_empty(), "unclosed composite");
        &self.buf
    }

    pub fn into_code(self) -> CanonicalCode {
        debug_assert!(self.open.is_empty(), "unclosed composite");
        CanonicalCode(self.buf)
    }

    fn header(&mut self, tag: u8, len: usize) {
        self.buf.push(tag);
        self.buf.extend_from_slice(&(len as u32).to_be_bytes());
    }

    pub fn uint(&mut self, v: u128) {
        let bytes = v.to_be_bytes();
        let skip = bytes.iter().take_while(|&&b| b == 0).count();
        self.header(TAG_UINT, 16 - skip);
        self.buf.extend_from_slice(&bytes[skip..]);
    }

    pub fn biguint(&mut self, v: &BigUint) {
        if v.bits() <= 128 {
            let mut acc = 0u128;
            for d in v.iter_u64_digits().rev() {
                acc = (acc << 64) | d as u128;
            }
            self.uint(acc);
        } else {
            let bytes = v.to_bytes_be();
            self.header(TAG_UINT, bytes.len());
            self.buf.extend_from_slice(&bytes);
        }
    }

    pub fn int(&mut self, v: i64) {
        if v >= 0 {
            self.uint(v as u128);
        } else {
            let mag = v.unsigned_abs().to_be_bytes();
            let skip = mag.iter().take_while(|&&b| b == 0).count();
            self.header(TAG_NEG, 8 - skip);
            self.buf.extend_from_slice(&mag[skip..]);
        }
    }

    pub fn bigint(&mut self, v: &BigInt) {
        match v.sign() {
            Sign::Minus => {
                let bytes = v.magnitude().to_bytes_be();
                self.header(TAG_NEG, bytes.len());
                self.buf.extend_from_slice(&bytes);
            }
            _ => self.biguint(v.magnitude()),
        }
    }

    pub fn symbol(&mut self, s: &str) {
        self.header(TAG_SYMBOL, s.len());
        self.buf.extend_from_slice(s.as_bytes());
    }

    pub fn digest(&mut self, d: &Digest) {
        self.header(TAG_DIGEST, 32);
        self.buf.extend_from_slice(&d.0);
    }

    /// Appends an already encoded value verbatim.
    pub fn raw(&mut self, encoded: &[u8]) {
        self.buf.extend_from_slice(encoded);
    }

    pub fn open_tuple(&mut self) {
        self.open(TAG_TUPLE);
    }

    pub fn open(&mut self, tag: u8) {
        self.open.push(self.buf.len());
        self.header(tag, 0);
    }

    pub fn close(&mut self) {
        let start = self.open.pop().expect("close without open");
        let len = (self.buf.len() - start - 5) as u32;
        self.buf[start + 1..start + 5].copy_from_slice(&len.to_be_bytes());
    }

    /// Writes a multiset from already encoded members, sorting them first.
    pub fn multiset_of<B: AsRef<[u8]>>(&mut self, members: &mut [B]) {
        members.sort_by(|a, b| a.as_ref().cmp(b.as_ref()));
        self.open(TAG_MULTISET);
        for m in members.iter() {
            self.buf.extend_from_slice(m.as_ref());
        }
        self.close();
    }

    /// Writes a multiset of digests. Digests all encode to the same length,
    /// so sorting the raw digests sorts their encodings.
    pub fn multiset_of_digests(&mut self, members: &mut [Digest]) {
        members.sort_unstable();
        self.open(TAG_MULTISET);
        for d in members.iter() {
            self.digest(d);
        }
        self.close();
    }

    /// Writes a multiset of `(digest, digest)` tuples.
    pub fn multiset_of_digest_pairs(&mut self, members: &mut [(Digest, Digest)]) {
        members.sort_unstable();
        self.open(TAG_MULTISET);
        for (a, b) in members.iter() {
            self.open_tuple();
            self.digest(a);
            self.digest(b);
            self.close();
        }
        self.close();
    }
}

/// A canonical serialization of a nested color value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode(#[serde(with = "hex_bytes")] Vec<u8>);

impl CanonicalCode {
    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        CanonicalCode(bytes)
    }

    pub fn uint(v: u128) -> Self {
        let mut e = Encoder::new();
        e.uint(v);
        e.into_code()
    }

    pub fn biguint(v: &BigUint) -> Self {
        let mut e = Encoder::new();
        e.biguint(v);
        e.into_code()
    }

    pub fn int(v: i64) -> Self {
        let mut e = Encoder::new();
        e.int(v);
        e.into_code()
    }

    pub fn bigint(v: &BigInt) -> Self {
        let mut e = Encoder::new();
        e.bigint(v);
        e.into_code()
    }

    pub fn symbol(s: &str) -> Self {
        let mut e = Encoder::new();
        e.symbol(s);
        e.into_code()
    }

    pub fn digest_code(d: &Digest) -> Self {
        let mut e = Encoder::new();
        e.digest(d);
        e.into_code()
    }

    pub fn tuple<I: IntoIterator<Item = CanonicalCode>>(members: I) -> Self {
        let mut e = Encoder::new();
        e.open_tuple();
        for m in members {
            e.raw(&m.0);
        }
        e.close();
        e.into_code()
    }

    pub fn multiset<I: IntoIterator<Item = CanonicalCode>>(members: I) -> Self {
        let mut v: Vec<Vec<u8>> = members.into_iter().map(|c| c.0).collect();
        let mut e = Encoder::new();
        e.multiset_of(&mut v);
        e.into_code()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn digest(&self) -> Digest {
        Digest::of(&self.0)
    }

    /// Hex form of the SHA-256 digest, as shown in reports.
    pub fn digest_hex(&self) -> String {
        self.digest().to_hex()
    }

    /// Full serialization in hex.
    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    /// Splits the top-level value into `(tag, payload)`.
    pub fn top(&self) -> Option<(u8, &[u8])> {
        if self.0.len() < 5 {
            return None;
        }
        let len = u32::from_be_bytes(self.0[1..5].try_into().ok()?) as usize;
        (self.0.len() == 5 + len).then(|| (self.0[0], &self.0[5..]))
    }

    /// Member codes of a top-level tuple or multiset.
    pub fn members(&self) -> Option<Vec<CanonicalCode>> {
        let (tag, mut payload) = self.top()?;
        if tag != TAG_TUPLE && tag != TAG_MULTISET {
            return None;
        }
        let mut out = Vec::new();
        while !payload.is_empty() {
            if payload.len() < 5 {
                return None;
            }
            let len = u32::from_be_bytes(payload[1..5].try_into().ok()?) as usize;
            if payload.len() < 5 + len {
                return None;
            }
            out.push(CanonicalCode(payload[..5 + len].to_vec()));
            payload = &payload[5 + len..];
        }
        Some(out)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({}…, {} bytes)", &self.digest_hex()[..16], self.0.len())
    }
}

mod hex_bytes {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[u8], s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&hex::encode(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u8>, D::Error> {
        let s = String::deserialize(d)?;
        hex::decode(s).map_err(serde::de::Error::custom)
    }
}
