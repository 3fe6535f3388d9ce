use crate::error::{Error, Result};
use crate::jdt::{SlideMove, SlideTrace};
use crate::shapes::{Cell, Flavor};
use crate::tableau::SlideState;

use super::lrs::MarkedTableau;
use super::symbol::MarkedSymbol;

/// Forward shifted slide of the empty inner corner `hole`.
///
/// Off the diagonal the hole trades places with the entry below (`a`) when
/// `a < b`, or `a == b` unmarked, where `b` is the entry to its right;
/// otherwise with `b`. On the diagonal there is no cell below, and the
/// configuration `[hole, i'; ·, i]` turns into `[i, i; ·, hole]`.
pub fn shifted_slide(t: &MarkedTableau, hole: Cell) -> Result<SlideTrace<MarkedSymbol>> {
    let mut state = SlideState::new(t);
    if t.flavor() != Flavor::Shifted || !state.is_inner_corner(hole) {
        return Err(Error::NotInnerCorner(hole));
    }
    let mut pos = hole;
    let mut path = vec![pos];
    let mut moves = Vec::new();
    loop {
        let (r, c) = pos;
        let right = state.entries.get(&(r, c + 1)).copied();
        if r == c {
            let diagonal = state.entries.get(&(r + 1, r + 1)).copied();
            match right {
                None => break,
                Some(b) if b.marked && diagonal == Some(MarkedSymbol::unmarked(b.value)) => {
                    let i = MarkedSymbol::unmarked(b.value);
                    state.entries.remove(&(r + 1, r + 1));
                    state.entries.insert((r, r), i);
                    state.entries.insert((r, r + 1), i);
                    pos = (r + 1, r + 1);
                    moves.push(SlideMove::Special);
                    path.push(pos);
                    continue;
                }
                Some(_) => {}
            }
        }
        let below = state.entries.get(&(r + 1, c)).copied();
        let (next, mv) = match (below, right) {
            (None, None) => break,
            (Some(a), Some(b)) if a < b || (a == b && !a.marked) => ((r + 1, c), SlideMove::Vertical),
            (Some(_), None) => ((r + 1, c), SlideMove::Vertical),
            (_, Some(_)) => ((r, c + 1), SlideMove::Horizontal),
        };
        let v = state.entries.remove(&next).expect("neighbour is filled");
        state.entries.insert(pos, v);
        pos = next;
        moves.push(mv);
        path.push(pos);
    }
    Ok(SlideTrace {
        start: hole,
        path,
        moves,
        result: state.close_forward(hole, pos),
    })
}

/// Reverse shifted slide of the empty outer corner `hole`; the exact inverse
/// of [`shifted_slide`].
pub fn reverse_shifted_slide(t: &MarkedTableau, hole: Cell) -> Result<SlideTrace<MarkedSymbol>> {
    let mut state = SlideState::new(t);
    if t.flavor() != Flavor::Shifted || !state.is_outer_corner(hole) {
        return Err(Error::NotOuterCorner(hole));
    }
    let mut pos = hole;
    let mut path = vec![pos];
    let mut moves = Vec::new();
    loop {
        let (r, c) = pos;
        let above = if r > 1 { state.entries.get(&(r - 1, c)).copied() } else { None };
        if r == c {
            // undo a special slide: [i, i; ·, hole] -> [hole, i'; ·, i]
            let diagonal = if r > 1 { state.entries.get(&(r - 1, r - 1)).copied() } else { None };
            if let Some(u) = above {
                if !u.marked && diagonal == Some(u) {
                    state.entries.remove(&(r - 1, r - 1));
                    state.entries.insert((r - 1, r), MarkedSymbol::marked(u.value));
                    state.entries.insert((r, r), u);
                    pos = (r - 1, r - 1);
                    moves.push(SlideMove::Special);
                    path.push(pos);
                    continue;
                }
            }
        }
        let left = if c > r { state.entries.get(&(r, c - 1)).copied() } else { None };
        let (next, mv) = match (above, left) {
            (None, None) => break,
            (Some(u), Some(l)) if u > l || (u == l && !u.marked) => ((r - 1, c), SlideMove::Vertical),
            (Some(_), None) => ((r - 1, c), SlideMove::Vertical),
            (_, Some(_)) => ((r, c - 1), SlideMove::Horizontal),
        };
        let v = state.entries.remove(&next).expect("neighbour is filled");
        state.entries.insert(pos, v);
        pos = next;
        moves.push(mv);
        path.push(pos);
    }
    Ok(SlideTrace {
        start: hole,
        path,
        moves,
        result: state.close_reverse(hole, pos),
    })
}
