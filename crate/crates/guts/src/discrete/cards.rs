//! Cards, two-card hands, and the global strict order on all 1326 hands.

use crate::error::{input, Result};
use serde::Serialize;
use std::sync::OnceLock;

/// Number of two-card hands from a 52-card deck.
pub const HAND_COUNT: u32 = 1326;
/// Hands that are not pairs; these occupy order indices 1..=1248.
pub const NONPAIR_COUNT: u32 = 1248;
/// For any fixed hand, the number of hands sharing a card with it
/// (including itself): 2*51 - 1.
pub const OVERLAP_COUNT: u32 = 101;

/// A playing card. Rank r stands for card number r+1 (rank 1 is the 2,
/// rank 13 the Ace); suits 1..=4 are Clubs, Hearts, Diamonds, Spades.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Card {
    pub rank: u8,
    pub suit: u8,
}

impl Card {
    pub fn new(rank: u8, suit: u8) -> Result<Self> {
        if !(1..=13).contains(&rank) {
            return Err(input(format!("rank must be 1..=13, got {rank}")));
        }
        if !(1..=4).contains(&suit) {
            return Err(input(format!("suit must be 1..=4, got {suit}")));
        }
        Ok(Self { rank, suit })
    }

    /// Single-card order index 4*(rank-1) + suit, in 1..=52.
    pub fn index(&self) -> u32 {
        4 * (self.rank as u32 - 1) + self.suit as u32
    }

    pub fn from_index(index: u32) -> Result<Self> {
        if !(1..=52).contains(&index) {
            return Err(input(format!("card index must be 1..=52, got {index}")));
        }
        Ok(Self {
            rank: ((index - 1) / 4 + 1) as u8,
            suit: ((index - 1) % 4 + 1) as u8,
        })
    }

    /// Short name like "8H", "10C", "JS", "AS".
    pub fn name(&self) -> String {
        let number = match self.rank + 1 {
            n @ 2..=10 => n.to_string(),
            11 => "J".to_string(),
            12 => "Q".to_string(),
            13 => "K".to_string(),
            _ => "A".to_string(),
        };
        let suit = ["C", "H", "D", "S"][self.suit as usize - 1];
        format!("{number}{suit}")
    }
}

/// An unordered two-card hand, stored with the higher card first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Hand2 {
    pub high: Card,
    pub low: Card,
    pub is_pair: bool,
}

impl Hand2 {
    pub fn new(a: Card, b: Card) -> Result<Self> {
        if a == b {
            return Err(input(format!("hand needs two distinct cards, got {} twice", a.name())));
        }
        let (high, low) = if a.index() > b.index() { (a, b) } else { (b, a) };
        Ok(Self {
            high,
            low,
            is_pair: high.rank == low.rank,
        })
    }

    /// Name like "JS/7C".
    pub fn name(&self) -> String {
        format!("{}/{}", self.high.name(), self.low.name())
    }
}

/// The strict total order on all 1326 hands: non-pairs first (indices
/// 1..=1248), compared by high-card rank, then low-card rank, then
/// high-card suit, then low-card suit; the 78 pairs sit above every
/// non-pair (1249..=1326) ordered by rank and suit pair.
///
/// Note that the low card's rank outranks the high card's suit: JC/7C
/// beats JS/6S. For a non-pair (j,k)/(l,m) (high rank j, suit k; low rank
/// l, suit m) the enumeration rank is exactly
/// `16*((j-1)(j-2)/2 + (l-1)) + 4*(k-1) + m`.
pub struct HandOrder {
    hands: Vec<Hand2>,
    index_table: Vec<u16>,
}

/// Enumerates all hands and assigns order indices. Construction verifies
/// that the non-pair index formula agrees with lexicographic enumeration
/// on every hand.
pub fn build_hand_order() -> HandOrder {
    let mut hands = vec![None::<Hand2>; HAND_COUNT as usize + 1];
    let mut index_table = vec![0u16; 53 * 53];
    for a in 2..=52u32 {
        for b in 1..a {
            let high = Card::from_index(a).expect("valid");
            let low = Card::from_index(b).expect("valid");
            let hand = Hand2::new(high, low).expect("distinct");
            let idx = if hand.is_pair {
                let offset = match (high.suit, low.suit) {
                    (2, 1) => 1,
                    (3, 1) => 2,
                    (3, 2) => 3,
                    (4, 1) => 4,
                    (4, 2) => 5,
                    (4, 3) => 6,
                    other => unreachable!("suit pair {other:?} with high.index > low.index"),
                };
                NONPAIR_COUNT + 6 * (high.rank as u32 - 1) + offset
            } else {
                let (j, k) = (high.rank as u32, high.suit as u32);
                let (l, m) = (low.rank as u32, low.suit as u32);
                16 * ((j - 1) * (j - 2) / 2 + (l - 1)) + 4 * (k - 1) + m
            };
            assert!(
                (1..=HAND_COUNT).contains(&idx) && hands[idx as usize].is_none(),
                "index {idx} for {} collides or is out of range",
                hand.name()
            );
            hands[idx as usize] = Some(hand);
            index_table[(a * 53 + b) as usize] = idx as u16;
            index_table[(b * 53 + a) as usize] = idx as u16;
        }
    }
    let hands: Vec<Hand2> = hands.into_iter().flatten().collect();
    assert_eq!(hands.len(), HAND_COUNT as usize);
    // The non-pair block is strictly increasing under the rank-major
    // comparison (high rank, low rank, high suit, low suit).
    for w in hands[..NONPAIR_COUNT as usize].windows(2) {
        let key = |h: &Hand2| (h.high.rank, h.low.rank, h.high.suit, h.low.suit);
        assert!(
            key(&w[1]) > key(&w[0]),
            "non-pair enumeration out of order at {} -> {}",
            w[0].name(),
            w[1].name()
        );
        assert!(!w[0].is_pair && !w[1].is_pair);
    }
    for hand in &hands[NONPAIR_COUNT as usize..] {
        assert!(hand.is_pair);
    }
    HandOrder { hands, index_table }
}

/// Shared immutable instance.
pub fn hand_order() -> &'static HandOrder {
    static ORDER: OnceLock<HandOrder> = OnceLock::new();
    ORDER.get_or_init(build_hand_order)
}

impl HandOrder {
    /// Order index (1..=1326) of the hand holding card ids `a` and `b`.
    /// Card ids must be distinct and in 1..=52.
    pub fn index_of(&self, a: u32, b: u32) -> u32 {
        debug_assert!((1..=52).contains(&a) && (1..=52).contains(&b) && a != b);
        self.index_table[(a * 53 + b) as usize] as u32
    }

    /// The hand at order index 1..=1326.
    pub fn hand(&self, index: u32) -> &Hand2 {
        assert!(
            (1..=HAND_COUNT).contains(&index),
            "hand index must be 1..=1326, got {index}"
        );
        &self.hands[index as usize - 1]
    }

    pub fn is_pair(&self, index: u32) -> bool {
        self.hand(index).is_pair
    }
}
