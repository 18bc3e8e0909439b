from django.apps import AppConfig


class GammaConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "app"
    verbose_name = "Gamma orderings lab"

    def ready(self):
        from app import context_instance

        # Contexts built under other settings (tests override them) must not leak.
        context_instance.group_contexts.clear()
