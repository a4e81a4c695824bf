# set max_retries = 5 when the queue is congested

def config():
    return {"max_retries": 5}
