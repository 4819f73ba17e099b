from functools import partial
from typing import Iterable, List, Optional, Sequence, Tuple

from modules.models import FanoCertificate, Quiver
from modules.quiver_core import describe, gcd_form, moduli_dimension, _require_length
from modules.stability import (ample_stability_criterion, anticanonical_class, canonical_stability,
                               coprime_witness, section_a)
from utils.constants import (NOTE_INCONCLUSIVE, NOTE_NONEMPTY, NOTE_NOT_COPRIME, NOTE_POINT,
                             NOTE_RATIONAL, STATUS_CERTIFIED, STATUS_INCONCLUSIVE,
                             STATUS_NOT_COPRIME)
from utils.exceptions import QuiverError
from utils.logger import logger
from utils.parallel import parallel_map


class FanoCertifier:
    """Certifies the Fano property: coprimality first, then ample stability"""

    def certify(self, Q: Quiver, d: Sequence[int], budget: Optional[int] = None) -> FanoCertificate:
        """
        Certified: smooth projective Fano of dimension 1 - <d,d>, Picard rank n - 1,
        index gcd({d,_}). NotCoprime and Inconclusive carry a witness and assert nothing.
        """
        _require_length(Q, d)
        d = tuple(d)
        if any(x < 0 for x in d):
            raise QuiverError(f"Dimension vector {list(d)} has negative entries")
        if not any(d):
            raise QuiverError("Dimension vector must be non-zero")

        theta = canonical_stability(Q, d)
        dimension = moduli_dimension(Q, d)
        rank = Q.n - 1
        index = gcd_form(theta.theta)

        witness = coprime_witness(theta, budget)
        if witness is not None:
            logger.info(f"{describe(Q)}, d={list(d)}: not coprime, theta vanishes on {list(witness)}")
            return FanoCertificate(
                status=STATUS_NOT_COPRIME,
                dimension=dimension,
                picard_rank=rank,
                index=index,
                canonical_theta=theta,
                witness=witness,
                notes=(NOTE_NOT_COPRIME, NOTE_NONEMPTY),
            )

        verdict = ample_stability_criterion(Q, theta, budget)
        if not verdict.certified:
            logger.info(f"{describe(Q)}, d={list(d)}: inconclusive at e={list(verdict.witness)} "
                        f"(<e,d-e> = {verdict.witness_pairing})")
            return FanoCertificate(
                status=STATUS_INCONCLUSIVE,
                dimension=dimension,
                picard_rank=rank,
                index=index,
                canonical_theta=theta,
                witness=verdict.witness,
                notes=(NOTE_INCONCLUSIVE, NOTE_NONEMPTY),
            )

        # coprime implies indivisible, so the section exists
        anticanonical = anticanonical_class(Q, d, section_a(d))
        if anticanonical.theta != theta.theta:
            raise AssertionError(f"det(T) = {list(anticanonical.theta)} differs from "
                                 f"{{d,_}} = {list(theta.theta)}")

        notes = [NOTE_NONEMPTY, NOTE_RATIONAL]
        if index == 0:
            notes.insert(0, NOTE_POINT)

        logger.info(f"{describe(Q)}, d={list(d)}: certified Fano, dim {dimension}, "
                    f"rank {rank}, index {index}")
        return FanoCertificate(
            status=STATUS_CERTIFIED,
            dimension=dimension,
            picard_rank=rank,
            index=index,
            canonical_theta=theta,
            notes=tuple(notes),
        )

    def certify_batch(self, instances: Iterable[Tuple[Quiver, Sequence[int]]],
                      jobs: Optional[int] = None,
                      budget: Optional[int] = None) -> List[FanoCertificate]:
        """Certificates in input order; identical for every value of jobs"""
        return parallel_map(partial(_certify_instance, budget=budget), instances, jobs)


def _certify_instance(instance, budget=None) -> FanoCertificate:
    Q, d = instance
    return fano_certifier.certify(Q, d, budget)


def certify_fano(Q: Quiver, d: Sequence[int], budget: Optional[int] = None) -> FanoCertificate:
    return fano_certifier.certify(Q, d, budget)


# Create global instance
fano_certifier = FanoCertifier()
