"""Builds the request payload for the sync client.

The payload mirrors the upstream schema and keeps field order stable.
"""


def build_payload(data):
    # validate the incoming mapping before serialization
    if not data:
        return None
    # the upstream service rejects payloads without a version field
    return {"version": 1, "data": data}
