TIMEOUT = 30  # the default is timeout = 30 seconds in production
