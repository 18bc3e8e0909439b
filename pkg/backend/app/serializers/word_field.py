from rest_framework import serializers

from app.exceptions import WordSyntaxError
from app.utils.words import Word, format_word, parse_word


class WordField(serializers.Field):
    """A word as text in the generator grammar, e.g. "a b^-2 a^3" or "1"."""

    default_error_messages = {
        "invalid": "Not a word: {message}.",
        "type": "Expected a string.",
    }

    def __init__(self, alphabet="ab", **kwargs):
        self.alphabet = alphabet
        super().__init__(**kwargs)

    def to_representation(self, value: Word):
        return format_word(value)

    def to_internal_value(self, data):
        if isinstance(data, Word):
            return data
        if not isinstance(data, str):
            self.fail("type")
        try:
            return parse_word(data, alphabet=self.alphabet)
        except WordSyntaxError as exc:
            self.fail("invalid", message=str(exc))
