"""Builds the summary table.

<table>
  <tr><td>name</td><td>count</td></tr>
</table>
"""
