class Store:
    """Persistent key value store backed by a single file."""

    def get(self, key):
        """Returns the stored value or None when the key is missing."""
        return self._data.get(key)
