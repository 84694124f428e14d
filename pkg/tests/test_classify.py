import random

import pytest

from affectsim.classify import (
    AffectKind,
    classify_all,
    classify_bystander_affects,
    classify_causer_affects,
    classify_target_affect,
    normalize_kind,
    observer_valence,
    prospective_affects,
    tag_consciousness,
)
from affectsim.model import Event, WorldState, apply_event, attention

from test_model import DEMO_EVENTS, replay

K = AffectKind


def kinds(affects, experiencer=None):
    return [
        a.kind for a in affects if experiencer is None or a.experiencer == experiencer
    ]


class TestTargetAffect:
    @pytest.mark.parametrize(
        "expected,utility,kind",
        [
            (None, 1, K.DELIGHT),
            (None, 0, K.SURPRISE),
            (None, -3, K.FRIGHT),
            (2, 2, K.SATISFACTION),
            (2, 3, K.SATISFACTION),
            (2, 1, K.DISAPPOINTMENT),
            (-4, -4, K.FEARS_CONFIRMED),
            (-4, -5, K.FEARS_CONFIRMED),
            (-4, -2, K.RELIEF),
            (0, 1, K.DELIGHT),
            (0, -1, K.FRIGHT),
            (0, 0, None),
        ],
    )
    def test_rules(self, expected, utility, kind):
        assert classify_target_affect(expected, utility) == kind


class TestObserverValence:
    def test_disliked_flips_sign(self):
        assert observer_valence("disliked", 2) == -2

    def test_neutral_counts_as_liking(self):
        assert observer_valence("neutral", -2) == -2

    def test_liked_keeps_sign(self):
        assert observer_valence("liked", 3) == 3

    def test_unknown_gives_no_reaction(self):
        assert observer_valence("unknown", 5) is None


class TestBystander:
    def test_pity_and_anger_for_harmed_friend(self):
        state = replay(DEMO_EVENTS[:3])
        affects = classify_bystander_affects(
            state, 1, Event(index=4, causer=3, target=2, utility=-1.0)
        )
        assert [(a.kind, a.target_ref) for a in affects] == [(K.PITY, 2), (K.ANGER, 3)]

    def test_envy_and_anger_for_helped_enemy(self):
        state = replay(DEMO_EVENTS[:5])
        affects = classify_bystander_affects(
            state, 2, Event(index=6, causer=1, target=3, utility=2.0)
        )
        assert [(a.kind, a.target_ref) for a in affects] == [(K.ENVY, 3), (K.ANGER, 1)]

    def test_happy_for_and_gratitude_with_neutral_attitude(self):
        state = replay(DEMO_EVENTS[:6])
        affects = classify_bystander_affects(
            state, 1, Event(index=7, causer=2, target=3, utility=2.0)
        )
        assert [(a.kind, a.target_ref) for a in affects] == [(K.HAPPY_FOR, 3), (K.GRATITUDE, 2)]

    def test_unknown_target_draws_no_reaction(self):
        state = WorldState.fresh(3)
        affects = classify_bystander_affects(
            state, 3, Event(index=1, causer=1, target=2, utility=1.0)
        )
        assert affects == []

    def test_zero_utility_draws_no_reaction(self):
        state = replay(DEMO_EVENTS[:3])
        affects = classify_bystander_affects(
            state, 1, Event(index=4, causer=3, target=2, utility=0.0)
        )
        assert affects == []

    def test_pure_observation_no_state_change(self):
        state = replay(DEMO_EVENTS[:3])
        before = state
        classify_bystander_affects(state, 1, Event(index=4, causer=3, target=2, utility=-1.0))
        assert state == before


class TestCauser:
    def test_pride_for_harming_disliked(self):
        state = replay(DEMO_EVENTS[:4])
        affects = classify_causer_affects(
            state, 2, Event(index=5, causer=2, target=3, utility=-2.0)
        )
        assert kinds(affects) == [K.PRIDE]
        assert affects[0].intensity == 2

    def test_remorse_for_helping_disliked(self):
        state = replay(DEMO_EVENTS[:6])
        affects = classify_causer_affects(
            state, 2, Event(index=7, causer=2, target=3, utility=2.0)
        )
        assert set(kinds(affects)) == {K.REMORSE, K.SHAME, K.ANGER}

    def test_remorse_for_underperforming_self_expectation(self):
        state = replay(DEMO_EVENTS[:9])
        affects = classify_causer_affects(
            state, 2, Event(index=10, causer=2, target=2, utility=1.0)
        )
        assert set(kinds(affects)) == {K.REMORSE, K.SHAME, K.ANGER}

    def test_meeting_self_expectation_exactly_is_silent(self):
        state = replay(DEMO_EVENTS[:8])
        affects = classify_causer_affects(
            state, 2, Event(index=9, causer=2, target=2, utility=2.0)
        )
        assert affects == []


class TestProspective:
    def test_hope_desire_like_toward_benefactor(self):
        state = replay([(1, 2, 1)])
        affects = prospective_affects(state, 2)
        assert [(a.kind, a.target_ref) for a in affects] == [
            (K.HOPE, 1),
            (K.DESIRE, 1),
            (K.LIKE, 1),
        ]

    def test_fear_disgust_dislike_toward_self(self):
        state = replay(DEMO_EVENTS[:11])
        affects = [a for a in prospective_affects(state, 3) if a.target_ref == 3]
        assert kinds(affects) == [K.FEAR, K.DISGUST, K.DISLIKE]

    def test_empty_model_is_silent(self):
        assert prospective_affects(WorldState.fresh(2), 1) == []

    def test_zero_mean_relation_is_silent(self):
        state = replay([(3, 1, 0)])
        assert prospective_affects(state, 1) == []


class TestConsciousness:
    def test_fears_toward_attended_self_are_conscious(self):
        state = replay(DEMO_EVENTS[:11])
        event = state.event_log[-1]
        assert attention(state, 3) == 3
        affects = tag_consciousness(prospective_affects(state, 3), 3, event)
        by_ref = {(a.kind, a.target_ref): a.consciousness for a in affects}
        assert by_ref[(K.FEAR, 3)] == "conscious"
        assert by_ref[(K.HOPE, 1)] == "preconscious"

    def test_no_attention_means_all_preconscious(self):
        state = replay([(1, 2, 1)])
        event = state.event_log[-1]
        affects = tag_consciousness(prospective_affects(state, 2), None, event)
        assert all(a.consciousness == "preconscious" for a in affects)


class TestClassifyAll:
    def test_demo_step_four_superset(self):
        state = replay(DEMO_EVENTS[:3])
        affects = classify_all(state, Event(index=4, causer=3, target=2, utility=-1.0))
        got = {(a.experiencer, a.kind, a.target_kind, a.target_ref) for a in affects}
        assert {
            (2, K.FRIGHT, "event", 4),
            (2, K.ANGER, "agent", 3),
            (1, K.PITY, "agent", 2),
            (1, K.ANGER, "agent", 3),
        } <= got

    def test_demo_step_seven_superset(self):
        state = replay(DEMO_EVENTS[:6])
        affects = classify_all(state, Event(index=7, causer=2, target=3, utility=2.0))
        got = {(a.experiencer, a.kind) for a in affects}
        assert {
            (2, K.REMORSE),
            (2, K.ANGER),
            (2, K.ENVY),
            (1, K.HAPPY_FOR),
            (1, K.GRATITUDE),
        } <= got

    def test_zero_event_between_known_neutral_agents_is_quiet(self):
        state = replay([(1, 2, 0), (2, 1, 0)])
        affects = classify_all(state, Event(index=3, causer=1, target=2, utility=0.0))
        assert affects == []

    def test_pure_function_repeated_calls_agree(self):
        state = replay(DEMO_EVENTS[:6])
        event = Event(index=7, causer=2, target=3, utility=2.0)
        assert classify_all(state, event) == classify_all(state, event)

    def test_uses_pre_event_state(self):
        # a first event must read as unexpected even though the post state
        # holds a model of the causer
        state = WorldState.fresh(2)
        affects = classify_all(state, Event(index=1, causer=1, target=2, utility=3.0))
        assert (2, K.DELIGHT) in {(a.experiencer, a.kind) for a in affects}

    def test_every_instance_tagged(self):
        state = replay(DEMO_EVENTS[:6])
        affects = classify_all(state, Event(index=7, causer=2, target=3, utility=2.0))
        assert all(a.consciousness in ("conscious", "preconscious") for a in affects)

    def test_output_sorted_by_experiencer_then_kind(self):
        state = replay(DEMO_EVENTS[:6])
        affects = classify_all(state, Event(index=7, causer=2, target=3, utility=2.0))
        assert affects == sorted(affects, key=lambda a: a.sort_key())


class TestAliases:
    def test_aliases_normalize(self):
        assert normalize_kind("resentment") is K.ENVY
        assert normalize_kind("love") is K.LIKE
        assert normalize_kind("hate") is K.DISLIKE

    def test_canonical_names_pass_through(self):
        assert normalize_kind("fears_confirmed") is K.FEARS_CONFIRMED

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            normalize_kind("melancholy")


INVOLUTION = {
    K.DELIGHT: K.FRIGHT,
    K.FRIGHT: K.DELIGHT,
    K.SATISFACTION: K.FEARS_CONFIRMED,
    K.FEARS_CONFIRMED: K.SATISFACTION,
    K.DISAPPOINTMENT: K.RELIEF,
    K.RELIEF: K.DISAPPOINTMENT,
    K.HAPPY_FOR: K.GLOATING,
    K.GLOATING: K.HAPPY_FOR,
    K.PITY: K.ENVY,
    K.ENVY: K.PITY,
    K.GRATITUDE: K.ANGER,
    K.ANGER: K.GRATITUDE,
    K.HOPE: K.FEAR,
    K.FEAR: K.HOPE,
    K.DESIRE: K.DISGUST,
    K.DISGUST: K.DESIRE,
    K.LIKE: K.DISLIKE,
    K.DISLIKE: K.LIKE,
    K.SURPRISE: K.SURPRISE,
}


def involution_image(affects):
    """Map an affect multiset through the sign-flip involution.
    Pride expands to the remorse/shame/anger-at-self triple and vice versa."""
    out = []
    for a in affects:
        if a.kind is K.PRIDE:
            out.extend(
                [
                    (a.experiencer, K.REMORSE, "own_action"),
                    (a.experiencer, K.SHAME, "self"),
                    (a.experiencer, K.ANGER, "self"),
                ]
            )
        elif a.kind in (K.REMORSE, K.SHAME) or (a.kind is K.ANGER and a.target_kind == "self"):
            # the negative-causer triple collapses back onto pride; count
            # remorse as the representative and drop its companions
            if a.kind is K.REMORSE:
                out.append((a.experiencer, K.PRIDE, "own_action"))
        else:
            out.append((a.experiencer, INVOLUTION[a.kind], a.target_kind))
    return sorted(out)


def affect_shape(affects):
    return sorted((a.experiencer, a.kind, a.target_kind) for a in affects)


class TestNegationSymmetryRestricted:
    """The sign-flip involution on the fragment where no perceiver holds a
    relation to an event's (distinct) target, i.e. where no attitude-based
    valence flips occur.  Givers only cause events, receivers only receive
    them, and self-loop agents interact only with themselves."""

    def _restricted_scenario(self, rng):
        givers = list(range(1, rng.randint(2, 3) + 1))
        receivers = list(range(len(givers) + 1, len(givers) + rng.randint(1, 2) + 1))
        selfers = [len(givers) + len(receivers) + 1]
        n = selfers[-1]
        triples = []
        for _ in range(rng.randint(1, 30)):
            if rng.random() < 0.3:
                s = rng.choice(selfers)
                triples.append((s, s, rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])))
            else:
                triples.append(
                    (
                        rng.choice(givers),
                        rng.choice(receivers),
                        rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]),
                    )
                )
        return n, triples

    def _zero_free(self, triples):
        sums = {}
        for c, t, u in triples:
            sums[(t, c)] = sums.get((t, c), 0) + u
            if sums[(t, c)] == 0:
                return False
        return True

    def test_involution_holds_without_attitude_flips(self):
        rng = random.Random(7)
        checked = 0
        while checked < 100:
            n, triples = self._restricted_scenario(rng)
            if not self._zero_free(triples):
                continue
            checked += 1
            state = WorldState.fresh(n)
            mirror = WorldState.fresh(n)
            for i, (c, t, u) in enumerate(triples, start=1):
                event = Event(index=i, causer=c, target=t, utility=float(u))
                mevent = Event(index=i, causer=c, target=t, utility=float(-u))
                got = affect_shape(classify_all(mirror, mevent))
                want = involution_image(classify_all(state, event))
                assert got == want, f"step {i} of {triples}"
                state = apply_event(state, event)
                mirror = apply_event(mirror, mevent)
