from django.apps import AppConfig


class ConjugatesConfig(AppConfig):
    """Configuration for the conjugates application."""

    default_auto_field = "django.db.models.BigAutoField"
    name = "conjugates"
    verbose_name = "Legendre Conjugates"
