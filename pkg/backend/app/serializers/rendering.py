from rest_framework.renderers import JSONRenderer


def _sorted(data):
    if isinstance(data, dict):
        return {key: _sorted(data[key]) for key in sorted(data)}
    if isinstance(data, (list, tuple)):
        return [_sorted(item) for item in data]
    return data


def render_json(data) -> str:
    """Serializer output as indented JSON with sorted keys, identical across runs."""
    rendered = JSONRenderer().render(_sorted(data), renderer_context={"indent": 2})
    return rendered.decode("utf-8")
