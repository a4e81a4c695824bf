SQL = """
SELECT value FROM metrics  -- # not a python comment
"""

# aggregate the metric rows into daily buckets before upload
