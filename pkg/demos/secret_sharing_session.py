"""Run a full secret-sharing session, then one with a lying participant.

The dealer splits a bit string into 3-bit shares, transmits each share as a
marked catalog state, and the three receivers declare their measured bits.
A cheat-detect round (mark outside the share alphabet) runs first.
"""

import json

from groverqss import run_session
from groverqss.protocol import RoundConfig, run_round

SECRET = "110011101"


def main():
    result = run_session(SECRET, seed=42)
    print(f"honest session: verdict={result.verdict},"
          f" recovered={result.recovered_secret}")
    print(f"rounds played: {len(result.transcripts)}"
          " (1 cheat-detect + 3 message)")

    print("\nfirst message round, event by event:")
    for event in result.transcripts[1].events:
        print(" ", json.dumps(event.to_dict()))

    # now P2 flips their declared bit in round 2
    schedule = [
        {"kind": "message"},
        {"kind": "message", "liars": ["P2"]},
        {"kind": "message"},
    ]
    dishonest = run_session(SECRET, schedule=schedule, seed=42)
    print(f"\nsession with a liar: verdict={dishonest.verdict},"
          f" recovered={dishonest.recovered_secret}")
    reason = dishonest.transcripts[-1].verdict.data["reason"]
    print(f"abort reason: {reason}")

    # a single tampered round, standalone
    t = run_round(RoundConfig(k=23, marked="111", round_kind="cheat_detect",
                              liars=frozenset({"P1"})))
    print(f"\ntampered cheat-detect round: {t.verdict.data['verdict']}"
          f" ({t.verdict.data['reason']})")


if __name__ == "__main__":
    main()
