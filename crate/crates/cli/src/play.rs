//! Terminal play loop. The human is player I and moves first; the engine
//! answers as II.

use std::io::{BufRead, Write};
use std::path::Path;

use setgame_core::apg::{optimal_move, solve};
use setgame_core::game::{optimal_move_with, Classifier};
use setgame_core::hf::parse_braces;
use setgame_core::{Error, HFSet, Outcome, Player};

use crate::commands::{read_graph, Failure};

const HUMAN: Player = Player::I;

enum Reply {
    Move(usize),
    Quit,
}

/// Prompts until the human names one of `count` moves by number or by name.
fn ask(
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    count: usize,
    by_name: &dyn Fn(&str) -> Option<usize>,
) -> Result<Reply, Failure> {
    loop {
        write!(out, "{HUMAN}> ")?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            writeln!(out, "input closed; game abandoned")?;
            return Ok(Reply::Quit);
        }
        let line = line.trim();
        if line == "q" || line == "quit" {
            writeln!(out, "game abandoned")?;
            return Ok(Reply::Quit);
        }
        if let Ok(i) = line.parse::<usize>() {
            if i < count {
                return Ok(Reply::Move(i));
            }
        } else if let Some(i) = by_name(line) {
            return Ok(Reply::Move(i));
        }
        writeln!(
            out,
            "not a legal move: `{line}`; enter a number from 0 to {}",
            count - 1
        )?;
    }
}

fn verdict(mover: Player, winner: Option<Player>) -> String {
    match winner {
        Some(p) if p == mover => format!("{mover} to move and wins"),
        Some(p) => format!("{mover} to move, {p} wins"),
        None => format!("{mover} to move, drawn"),
    }
}

pub fn play_set(text: &str, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), Failure> {
    let mut pos = parse_braces(text).map_err(Error::from)?;
    let mut classifier = Classifier::new();
    let mut mover = HUMAN;
    writeln!(
        out,
        "you are {HUMAN}; pick a member by number or in braces, q to quit"
    )?;
    for ply in 1.. {
        let c = classifier.classify(&pos);
        let winner = if c.winner == Player::I {
            mover
        } else {
            mover.opponent()
        };
        writeln!(
            out,
            "ply {ply}: position {pos} w={} ({})",
            c.w,
            verdict(mover, Some(winner))
        )?;
        if pos.is_empty() {
            writeln!(out, "{mover} cannot move; {} wins", mover.opponent())?;
            return Ok(());
        }
        let next: HFSet = if mover == HUMAN {
            let moves = pos.elements();
            for (i, e) in moves.iter().enumerate() {
                writeln!(out, "  {i}: {e} w={}", classifier.classify(e).w)?;
            }
            let by_name = |s: &str| {
                let e = parse_braces(s).ok()?;
                moves.iter().position(|m| *m == e)
            };
            match ask(input, out, moves.len(), &by_name)? {
                Reply::Move(i) => moves[i].clone(),
                Reply::Quit => return Ok(()),
            }
        } else {
            let m = optimal_move_with(&mut classifier, &pos)?;
            writeln!(out, "{mover} plays {m}")?;
            m
        };
        pos = next;
        mover = mover.opponent();
    }
    unreachable!("the ply counter is unbounded")
}

pub fn play_graph(
    path: &Path,
    start: &str,
    max_plies: usize,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let g = read_graph(path)?;
    let outcomes = solve(&g);
    let mut node = g.require(start).map_err(Error::from)?;
    let mut mover = HUMAN;
    writeln!(
        out,
        "you are {HUMAN}; pick a member by number or by id, q to quit"
    )?;
    for ply in 1..=max_plies {
        let o = outcomes[node];
        let winner = match o {
            Outcome::WinI(_) => Some(mover),
            Outcome::WinII(_) => Some(mover.opponent()),
            Outcome::Draw => None,
        };
        let w = o.w().map_or("none".to_string(), |w| w.to_string());
        writeln!(
            out,
            "ply {ply}: position {} w={w} ({})",
            g.name(node),
            verdict(mover, winner)
        )?;
        let children = g.children(node);
        if children.is_empty() {
            writeln!(out, "{mover} cannot move; {} wins", mover.opponent())?;
            return Ok(());
        }
        node = if mover == HUMAN {
            for (i, &c) in children.iter().enumerate() {
                writeln!(out, "  {i}: {} {}", g.name(c), outcomes[c])?;
            }
            let by_name = |s: &str| children.iter().position(|&c| g.name(c) == s);
            match ask(input, out, children.len(), &by_name)? {
                Reply::Move(i) => children[i],
                Reply::Quit => return Ok(()),
            }
        } else {
            let m = optimal_move(&g, &outcomes, node)?;
            writeln!(out, "{mover} plays {}", g.name(m))?;
            m
        };
        mover = mover.opponent();
    }
    writeln!(out, "ply limit {max_plies} reached; game drawn")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(set: &str, moves: &str) -> String {
        let mut out = Vec::new();
        play_set(set, &mut moves.as_bytes(), &mut out)
            .ok()
            .expect("play succeeds");
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn engine_wins_as_second_player() {
        let text = run("{{{}}}", "0\n");
        assert!(text.contains("II plays {}"), "{text}");
        assert!(text.ends_with("I cannot move; II wins\n"), "{text}");
    }

    #[test]
    fn human_wins_from_a_first_player_win() {
        let text = run("{{},{{}}}", "{}\n");
        assert!(
            text.contains("ply 1: position {{},{{}}} w=1 (I to move and wins)"),
            "{text}"
        );
        assert!(text.ends_with("II cannot move; I wins\n"), "{text}");
    }

    #[test]
    fn illegal_moves_are_reprompted() {
        let text = run("{{}}", "7\n{{}}\n0\n");
        assert_eq!(text.matches("not a legal move").count(), 2);
    }

    #[test]
    fn eof_abandons() {
        let text = run("{{}}", "");
        assert!(text.ends_with("input closed; game abandoned\n"));
    }
}
