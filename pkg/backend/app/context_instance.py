# app/context_instance.py

from django.conf import settings

# Dictionary to hold group contexts keyed by n
group_contexts = {}


def get_group_context(n):
    """
    Retrieve the GroupContext for Γn.
    If one doesn't exist, build it with the limits from settings.
    """
    if n not in group_contexts:
        from app.utils.words import GroupContext

        group_contexts[n] = GroupContext.build(
            n,
            max_q=settings.GAMMA_MAX_Q,
            step_cap_factor=settings.GAMMA_STEP_CAP_FACTOR,
        )
    return group_contexts[n]
