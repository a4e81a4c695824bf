class MixedForm:
    def display(self):
        r"""
        Display the homogeneous components of the mixed form.

        EXAMPLES::

            sage: M = Manifold(2, 'M')
            sage: F.display()
        """
        return None
