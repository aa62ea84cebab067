//! Scalar linear XOR code for a validated GIC, and per-receiver decoding.
//!
//! The code is `w_I = XOR of x_i over the inner set`, followed by
//! `w_j = x_j ^ XOR of x_q over N+(j)` for each non-inner `j` ascending:
//! `N - K + 1` symbols of `t` bits each.

use std::collections::BTreeMap;
use std::fmt;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::digraph::{Vertex, VertexSet};
use crate::gic::GicStructure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("expected {expected} messages, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("message {index} has {got} bytes, expected {expected}")]
    PayloadLength {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("t must be at least 1")]
    ZeroBits,
    #[error("side information for vertex {0} is missing")]
    MissingSide(Vertex),
    #[error("vertex {0} is not an inner vertex")]
    NotInner(Vertex),
    #[error("vertex {0} is an inner vertex")]
    NotNonInner(Vertex),
    #[error("vertex {0} is outside the structure")]
    UnknownVertex(Vertex),
    #[error("decoding {vertex} leaves residue {{{residue}}} instead of {{{vertex}}}")]
    MaskResidue { vertex: Vertex, residue: VertexSet },
    #[error("code has {got} symbols, structure expects {expected}")]
    CodeShape { expected: usize, got: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A `t`-bit string stored MSB-first in `ceil(t / 8)` bytes; padding bits are
/// zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Payload(Vec<u8>);

impl Payload {
    pub fn zero(t: usize) -> Self {
        Payload(vec![0; t.div_ceil(8)])
    }

    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    /// Builds a payload from a string of `0`/`1` characters.
    pub fn from_bit_str(bits: &str) -> Option<Self> {
        let mut p = Payload::zero(bits.len());
        for (k, c) in bits.chars().enumerate() {
            match c {
                '0' => {}
                '1' => p.0[k / 8] |= 0x80 >> (k % 8),
                _ => return None,
            }
        }
        Some(p)
    }

    pub fn to_bit_str(&self, t: usize) -> String {
        (0..t)
            .map(|k| if self.0[k / 8] & (0x80 >> (k % 8)) != 0 { '1' } else { '0' })
            .collect()
    }

    /// Parses lowercase hex of exactly `ceil(t / 8)` bytes with zero padding
    /// bits.
    pub fn from_hex(hex: &str, t: usize) -> Result<Self, String> {
        let want = t.div_ceil(8);
        if hex.len() != 2 * want {
            return Err(format!("expected {} hex digits, got {}", 2 * want, hex.len()));
        }
        if !hex.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b)) {
            return Err(format!("not lowercase hex: {hex:?}"));
        }
        let bytes: Vec<u8> = (0..want)
            .map(|k| u8::from_str_radix(&hex[2 * k..2 * k + 2], 16).unwrap())
            .collect();
        let p = Payload(bytes);
        if p.0.last().is_some_and(|&b| b & padding_mask(t) != 0) {
            return Err("padding bits beyond t are set".into());
        }
        Ok(p)
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    pub fn xor_assign(&mut self, other: &Payload) {
        debug_assert_eq!(self.0.len(), other.0.len());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Payload) -> Payload {
        let mut p = self.clone();
        p.xor_assign(other);
        p
    }

    fn random(t: usize, rng: &mut impl RngCore) -> Self {
        let mut p = Payload::zero(t);
        rng.fill_bytes(&mut p.0);
        if let Some(last) = p.0.last_mut() {
            *last &= !padding_mask(t);
        }
        p
    }
}

/// Bits of the final byte that lie beyond `t`.
fn padding_mask(t: usize) -> u8 {
    match t % 8 {
        0 => 0,
        r => 0xff >> r,
    }
}

impl fmt::Display for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for Payload {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// One `t`-bit message per receiver; `payloads[i - 1]` is `x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MessageVector {
    t: usize,
    payloads: Vec<Payload>,
}

impl MessageVector {
    pub fn new(t: usize, payloads: Vec<Payload>) -> Result<Self, CodecError> {
        if t == 0 {
            return Err(CodecError::ZeroBits);
        }
        let want = t.div_ceil(8);
        for (k, p) in payloads.iter().enumerate() {
            if p.0.len() != want {
                return Err(CodecError::PayloadLength {
                    index: k + 1,
                    expected: want,
                    got: p.0.len(),
                });
            }
        }
        Ok(MessageVector { t, payloads })
    }

    pub fn zeros(n: usize, t: usize) -> Self {
        MessageVector {
            t,
            payloads: vec![Payload::zero(t); n],
        }
    }

    pub fn random(n: usize, t: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        MessageVector {
            t,
            payloads: (0..n).map(|_| Payload::random(t, &mut rng)).collect(),
        }
    }

    /// The `index`-th of all `2^n` assignments at `t = 1`; bit `i - 1` of
    /// `index` is `x_i`.
    pub fn from_index_t1(n: usize, index: u64) -> Self {
        let payloads = (0..n)
            .map(|k| Payload(vec![if index >> k & 1 == 1 { 0x80 } else { 0 }]))
            .collect();
        MessageVector { t: 1, payloads }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.payloads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.payloads.is_empty()
    }

    pub fn payloads(&self) -> &[Payload] {
        &self.payloads
    }

    pub fn message(&self, v: Vertex) -> &Payload {
        &self.payloads[v - 1]
    }

    /// XOR of the messages over `mask`.
    pub fn xor_over(&self, mask: &VertexSet) -> Payload {
        mask.iter().fold(Payload::zero(self.t), |acc, v| acc.xor(self.message(v)))
    }

    pub fn xor(&self, other: &MessageVector) -> MessageVector {
        MessageVector {
            t: self.t,
            payloads: self
                .payloads
                .iter()
                .zip(&other.payloads)
                .map(|(a, b)| a.xor(b))
                .collect(),
        }
    }

    /// The messages receiver `v` caches.
    pub fn side_information(&self, g: &GicStructure, v: Vertex) -> SideInfo {
        g.digraph()
            .successors(v)
            .iter()
            .map(|&q| (q, self.message(q).clone()))
            .collect()
    }
}

/// Parses the message file format: `t=<bits>` then one lowercase hex line per
/// message.
pub fn parse_messages(text: &str) -> Result<MessageVector, CodecError> {
    let mut lines = text.split('\n').enumerate().filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or(CodecError::Parse {
        line: 1,
        msg: "missing t=<bits> header".into(),
    })?;
    let t: usize = header
        .strip_prefix("t=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| CodecError::Parse {
            line: 1,
            msg: format!("expected t=<bits>, got {header:?}"),
        })?;
    if t == 0 {
        return Err(CodecError::ZeroBits);
    }
    let payloads = lines
        .map(|(k, l)| {
            Payload::from_hex(l, t).map_err(|msg| CodecError::Parse { line: k + 1, msg })
        })
        .collect::<Result<Vec<_>, _>>()?;
    MessageVector::new(t, payloads)
}

pub fn format_messages(m: &MessageVector) -> String {
    let mut s = format!("t={}", m.t);
    for p in &m.payloads {
        s.push('\n');
        s.push_str(&p.to_hex());
    }
    s
}

/// Receiver-owned side information: message per cached vertex.
pub type SideInfo = BTreeMap<Vertex, Payload>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodedSymbol {
    pub mask: VertexSet,
    pub payload: Payload,
}

impl fmt::Display for CodedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mask={} payload={}", self.mask, self.payload)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexCode {
    pub t: usize,
    pub symbols: Vec<CodedSymbol>,
}

impl IndexCode {
    /// Broadcast rate: coded bits sent per message bit.
    pub fn rate(&self) -> usize {
        self.symbols.len()
    }

    pub fn masks(&self) -> Vec<VertexSet> {
        self.symbols.iter().map(|s| s.mask.clone()).collect()
    }

    /// Componentwise XOR of two codes with identical masks.
    pub fn xor(&self, other: &IndexCode) -> IndexCode {
        IndexCode {
            t: self.t,
            symbols: self
                .symbols
                .iter()
                .zip(&other.symbols)
                .map(|(a, b)| CodedSymbol {
                    mask: a.mask.clone(),
                    payload: a.payload.xor(&b.payload),
                })
                .collect(),
        }
    }
}

impl fmt::Display for IndexCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.symbols.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Symbol masks in transmission order: `V_I`, then `{j} u N+(j)` ascending.
pub fn symbol_masks(g: &GicStructure) -> Vec<VertexSet> {
    let d = g.digraph();
    std::iter::once(g.inner().clone())
        .chain(g.non_inner().iter().map(|j| {
            let mut m: VertexSet = d.successors(j).iter().copied().collect();
            m.insert(j);
            m
        }))
        .collect()
}

pub fn encode(g: &GicStructure, m: &MessageVector) -> Result<IndexCode, CodecError> {
    encode_counted(g, m).map(|(code, _)| code)
}

/// Encodes and reports the number of bit-level XOR operations performed.
pub fn encode_counted(g: &GicStructure, m: &MessageVector) -> Result<(IndexCode, u64), CodecError> {
    if m.len() != g.n() {
        return Err(CodecError::SizeMismatch {
            expected: g.n(),
            got: m.len(),
        });
    }
    let t = m.t();
    let mut ops = 0u64;
    let mut combine = |mask: &VertexSet| {
        let mut members = mask.iter();
        let mut acc = m.message(members.next().expect("masks are nonempty")).clone();
        for v in members {
            acc.xor_assign(m.message(v));
            ops += t as u64;
        }
        acc
    };
    let symbols = symbol_masks(g)
        .into_iter()
        .map(|mask| CodedSymbol {
            payload: combine(&mask),
            mask,
        })
        .collect();
    Ok((IndexCode { t, symbols }, ops))
}

/// `N - K + 1`.
pub fn code_length(g: &GicStructure) -> usize {
    g.n() - g.k() + 1
}

/// Upper bound on bit XORs needed to encode:
/// `t * ((K - 1) + sum of |N+(j)| over non-inner j)`.
pub fn xor_cost_bound(g: &GicStructure, t: usize) -> u64 {
    let fanout: usize = g
        .non_inner()
        .iter()
        .map(|j| g.digraph().out_degree(j))
        .sum();
    (t * (g.k() - 1 + fanout)) as u64
}

fn check_shape(g: &GicStructure, code: &IndexCode) -> Result<(), CodecError> {
    let expected = code_length(g);
    if code.symbols.len() != expected {
        return Err(CodecError::CodeShape {
            expected,
            got: code.symbols.len(),
        });
    }
    Ok(())
}

fn symbol_index(g: &GicStructure, j: Vertex) -> usize {
    1 + g.non_inner().iter().position(|v| v == j).expect("non-inner vertex")
}

/// Recovers `x_j` for non-inner `j` from `w_j` and the messages of `N+(j)`.
pub fn decode_noninner(
    g: &GicStructure,
    code: &IndexCode,
    j: Vertex,
    side: &SideInfo,
) -> Result<Payload, CodecError> {
    if !g.digraph().contains(j) {
        return Err(CodecError::UnknownVertex(j));
    }
    if g.is_inner(j) {
        return Err(CodecError::NotNonInner(j));
    }
    check_shape(g, code)?;
    let sym = &code.symbols[symbol_index(g, j)];
    strip_side(j, &sym.mask, sym.payload.clone(), side)
}

/// XORs out every known message in `mask`; what remains must be exactly `x_v`.
fn strip_side(
    v: Vertex,
    mask: &VertexSet,
    mut payload: Payload,
    side: &SideInfo,
) -> Result<Payload, CodecError> {
    if !mask.contains(v) {
        return Err(CodecError::MaskResidue {
            vertex: v,
            residue: mask.clone(),
        });
    }
    for q in mask.iter().filter(|&q| q != v) {
        let x = side.get(&q).ok_or(CodecError::MissingSide(q))?;
        payload.xor_assign(x);
    }
    Ok(payload)
}

/// Mask of `Z_i`, the XOR of `w_j` over the non-inner vertices of `T_i`.
pub fn z_mask(g: &GicStructure, i: Vertex) -> VertexSet {
    let masks = symbol_masks(g);
    let tree = g.tree(i).expect("inner vertex");
    let mut z = VertexSet::new();
    for j in tree.vertices().iter().filter(|&j| !g.is_inner(j)) {
        z.toggle_all(&masks[symbol_index(g, j)]);
    }
    z
}

/// Recovers `x_i` for inner `i`: `w_I ^ Z_i` has mask `{i} u N+(i)`, and the
/// receiver cancels its side information.
pub fn decode_inner(
    g: &GicStructure,
    code: &IndexCode,
    i: Vertex,
    side: &SideInfo,
) -> Result<Payload, CodecError> {
    if !g.digraph().contains(i) {
        return Err(CodecError::UnknownVertex(i));
    }
    if !g.is_inner(i) {
        return Err(CodecError::NotInner(i));
    }
    check_shape(g, code)?;
    let tree = g.tree(i).expect("validated structure has a tree per inner vertex");
    let mut mask = code.symbols[0].mask.clone();
    let mut payload = code.symbols[0].payload.clone();
    for j in tree.vertices().iter().filter(|&j| !g.is_inner(j)) {
        let sym = &code.symbols[symbol_index(g, j)];
        mask.toggle_all(&sym.mask);
        payload.xor_assign(&sym.payload);
    }
    let known: VertexSet = g.digraph().successors(i).iter().copied().collect();
    let residue = mask.difference(&known);
    if residue != VertexSet::from([i]) {
        return Err(CodecError::MaskResidue { vertex: i, residue });
    }
    strip_side(i, &mask, payload, side)
}

/// Decodes receiver `v`, inner or not.
pub fn decode(
    g: &GicStructure,
    code: &IndexCode,
    v: Vertex,
    side: &SideInfo,
) -> Result<Payload, CodecError> {
    if g.is_inner(v) {
        decode_inner(g, code, v, side)
    } else {
        decode_noninner(g, code, v, side)
    }
}

/// Encodes `m`, then has every receiver decode from the code and its own side
/// information only.
pub fn round_trip(g: &GicStructure, m: &MessageVector) -> bool {
    let Ok(code) = encode(g, m) else {
        return false;
    };
    g.digraph().vertices().all(|v| {
        let side = m.side_information(g, v);
        decode(g, &code, v, &side).is_ok_and(|x| &x == m.message(v))
    })
}

/// Mask-level decodability: for non-inner `j`, `mask(w_j) \ N+(j) = {j}`; for
/// inner `i`, `(mask(w_I) xor masks of Z_i) \ N+(i) = {i}`.
pub fn symbolic_decode_check(g: &GicStructure) -> bool {
    let d = g.digraph();
    let masks = symbol_masks(g);
    let known = |v: Vertex| -> VertexSet { d.successors(v).iter().copied().collect() };
    let non_inner_ok = g.non_inner().iter().all(|j| {
        masks[symbol_index(g, j)].difference(&known(j)) == VertexSet::from([j])
    });
    let inner_ok = g.inner().iter().all(|i| {
        let mut m = masks[0].clone();
        m.toggle_all(&z_mask(g, i));
        m.difference(&known(i)) == VertexSet::from([i])
    });
    non_inner_ok && inner_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;
    use crate::generators::{gen_family_vb, gen_fig4a_equivalent};
    use crate::gic::validate_gic;

    fn fig4a() -> GicStructure {
        let (d, inner) = gen_fig4a_equivalent();
        validate_gic(&d, &inner).unwrap()
    }

    fn digon() -> GicStructure {
        let d = Digraph::from_arcs(2, [(1, 2), (2, 1)]).unwrap();
        validate_gic(&d, &VertexSet::from([1, 2])).unwrap()
    }

    fn family(k: usize) -> GicStructure {
        let (d, inner) = gen_family_vb(k).unwrap();
        validate_gic(&d, &inner).unwrap()
    }

    #[test]
    fn fig4a_masks() {
        let g = fig4a();
        let code = encode(&g, &MessageVector::zeros(6, 1)).unwrap();
        assert_eq!(
            code.masks(),
            vec![
                VertexSet::from([1, 2, 3, 4]),
                VertexSet::from([2, 3, 5]),
                VertexSet::from([3, 4, 6])
            ]
        );
        assert_eq!(code_length(&g), 3);
    }

    #[test]
    fn digon_payload() {
        let g = digon();
        let m = MessageVector::new(
            2,
            vec![Payload::from_bit_str("01").unwrap(), Payload::from_bit_str("11").unwrap()],
        )
        .unwrap();
        let code = encode(&g, &m).unwrap();
        assert_eq!(code.symbols.len(), 1);
        assert_eq!(code.symbols[0].mask, VertexSet::from([1, 2]));
        assert_eq!(code.symbols[0].payload.to_bit_str(2), "10");
        assert_eq!(code_length(&g), 1);
    }

    #[test]
    fn family_lengths() {
        let code = encode(&family(4), &MessageVector::zeros(10, 8)).unwrap();
        assert_eq!(code.symbols.len(), 7);
        assert_eq!(code_length(&family(8)), 15);
    }

    #[test]
    fn xor_bounds() {
        assert_eq!(xor_cost_bound(&digon(), 1), 1);
        assert_eq!(xor_cost_bound(&fig4a(), 1), 7);
        // non-inner out-degrees of the K=4 family: 3 + 2 + 1 + 3 + 2 + 1
        assert_eq!(xor_cost_bound(&family(4), 8), 120);
        let g = family(4);
        let (_, ops) = encode_counted(&g, &MessageVector::random(10, 8, 1)).unwrap();
        assert!(ops <= xor_cost_bound(&g, 8));
    }

    #[test]
    fn noninner_decoding() {
        let g = fig4a();
        for idx in 0..64 {
            let m = MessageVector::from_index_t1(6, idx);
            let code = encode(&g, &m).unwrap();
            let x5 = decode_noninner(&g, &code, 5, &m.side_information(&g, 5)).unwrap();
            assert_eq!(&x5, m.message(5));
        }
        let m = MessageVector::random(6, 8, 3);
        let code = encode(&g, &m).unwrap();
        let mut side = m.side_information(&g, 5);
        side.remove(&2);
        assert_eq!(
            decode_noninner(&g, &code, 5, &side),
            Err(CodecError::MissingSide(2))
        );
        assert_eq!(
            decode_noninner(&g, &code, 1, &side),
            Err(CodecError::NotNonInner(1))
        );

        let g = family(4);
        let m = MessageVector::random(10, 16, 9);
        let code = encode(&g, &m).unwrap();
        let side = SideInfo::from([(1, m.message(1).clone())]);
        assert_eq!(&decode_noninner(&g, &code, 10, &side).unwrap(), m.message(10));
    }

    #[test]
    fn inner_decoding() {
        let g = fig4a();
        assert_eq!(z_mask(&g, 2), VertexSet::from([3, 4, 6]));
        assert_eq!(z_mask(&g, 3), VertexSet::new());
        let m = MessageVector::random(6, 8, 11);
        let code = encode(&g, &m).unwrap();
        for i in 1..=4 {
            let got = decode_inner(&g, &code, i, &m.side_information(&g, i)).unwrap();
            assert_eq!(&got, m.message(i));
        }
        let side = SideInfo::from([(1, m.message(1).clone())]);
        assert_eq!(decode_inner(&g, &code, 2, &side), Err(CodecError::MissingSide(6)));

        let g = digon();
        let m = MessageVector::random(2, 5, 1);
        let code = encode(&g, &m).unwrap();
        let side = SideInfo::from([(2, m.message(2).clone())]);
        assert_eq!(&decode_inner(&g, &code, 1, &side).unwrap(), m.message(1));
    }

    #[test]
    fn corrupted_code_is_detected() {
        let g = fig4a();
        let m = MessageVector::random(6, 8, 2);
        let mut code = encode(&g, &m).unwrap();
        code.symbols[1].mask = VertexSet::from([5, 2]);
        let err = decode_inner(&g, &code, 1, &m.side_information(&g, 1)).unwrap_err();
        assert!(matches!(err, CodecError::MaskResidue { vertex: 1, .. }));
        // receiver 2 never reads the symbol of vertex 5
        assert!(decode_inner(&g, &code, 2, &m.side_information(&g, 2)).is_ok());
        code.symbols.pop();
        assert!(matches!(
            decode_noninner(&g, &code, 5, &m.side_information(&g, 5)),
            Err(CodecError::CodeShape { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn exhaustive_round_trips() {
        for g in [fig4a(), digon()] {
            for idx in 0..1u64 << g.n() {
                assert!(round_trip(&g, &MessageVector::from_index_t1(g.n(), idx)));
            }
            assert!(symbolic_decode_check(&g));
        }
    }

    #[test]
    fn singleton_structure() {
        let g = validate_gic(&Digraph::empty(1), &VertexSet::from([1])).unwrap();
        let m = MessageVector::random(1, 7, 0);
        assert!(round_trip(&g, &m));
        assert_eq!(code_length(&g), 1);
        assert_eq!(xor_cost_bound(&g, 7), 0);
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(
            encode(&fig4a(), &MessageVector::zeros(5, 1)),
            Err(CodecError::SizeMismatch { expected: 6, got: 5 })
        );
    }

    #[test]
    fn message_file_format() {
        let m = parse_messages("t=12\n0ff0\nabc0\n").unwrap();
        assert_eq!(m.t(), 12);
        assert_eq!(m.len(), 2);
        assert_eq!(format_messages(&m), "t=12\n0ff0\nabc0");
        assert!(parse_messages("t=12\n0fff").is_err(), "padding bits set");
        assert!(parse_messages("t=8\nABCD").is_err());
        assert!(parse_messages("t=8\nab\nabc").is_err());
        assert!(parse_messages("x=8").is_err());
        assert_eq!(parse_messages("t=0"), Err(CodecError::ZeroBits));
    }

    #[test]
    fn odd_width_payloads_stay_within_t() {
        let m = MessageVector::random(4, 3, 5);
        for p in m.payloads() {
            assert_eq!(p.bytes()[0] & 0x1f, 0);
        }
        let p = Payload::from_bit_str("101").unwrap();
        assert_eq!(p.to_hex(), "a0");
        assert_eq!(Payload::from_hex("a0", 3).unwrap(), p);
    }

    #[test]
    fn code_text_format() {
        let g = fig4a();
        let code = encode(&g, &MessageVector::zeros(6, 1)).unwrap();
        assert_eq!(
            code.to_string(),
            "mask=1,2,3,4 payload=00\nmask=2,3,5 payload=00\nmask=3,4,6 payload=00"
        );
    }
}
