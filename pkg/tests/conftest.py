import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from affectsim.scenario import EventStatement, Scenario


def random_scenario(
    rng: random.Random,
    max_agents: int = 6,
    max_events: int = 50,
    utilities=range(-5, 6),
) -> Scenario:
    agents = rng.randint(1, max_agents)
    events = tuple(
        EventStatement(
            causer=rng.randint(1, agents),
            target=rng.randint(1, agents),
            utility=float(rng.choice(list(utilities))),
        )
        for _ in range(rng.randint(1, max_events))
    )
    return Scenario(agent_count=agents, statements=events)


def negate_scenario(scn: Scenario) -> Scenario:
    return Scenario(
        agent_count=scn.agent_count,
        agent_names=scn.agent_names,
        type_table={k: -v for k, v in scn.type_table.items()},
        statements=tuple(
            EventStatement(causer=s.causer, target=s.target, utility=-s.utility, label=s.label)
            for s in scn.statements
        ),
    )


def has_zero_sum_step(scn: Scenario) -> bool:
    """True if any relation sum hits zero at any step of the scenario."""
    sums: dict[tuple[int, int], float] = {}
    for s in scn.statements:
        key = (s.target, s.causer)
        sums[key] = sums.get(key, 0.0) + s.utility
        if sums[key] == 0:
            return True
    return False
